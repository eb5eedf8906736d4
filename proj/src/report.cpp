#include "charvar/report.hpp"

#include <sstream>

namespace charvar {

ojson matrix_json(const IntMat& m) {
  ojson rows = ojson::array();
  for (Index i = 0; i < m.rows(); ++i) {
    ojson row = ojson::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

ojson matrix_json(const RatMat& m) {
  ojson rows = ojson::array();
  for (Index i = 0; i < m.rows(); ++i) {
    ojson row = ojson::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(rat_str(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

ojson rats_json(const std::vector<Rat>& v) {
  ojson a = ojson::array();
  for (const Rat& r : v) a.push_back(rat_str(r));
  return a;
}

ojson ints_json(const std::vector<Int>& v) {
  ojson a = ojson::array();
  for (const Int& i : v) a.push_back(i.str());
  return a;
}

ojson bools_json(const std::vector<std::vector<bool>>& m) {
  ojson rows = ojson::array();
  for (const auto& r : m) {
    ojson row = ojson::array();
    for (bool b : r) row.push_back(b);
    rows.push_back(std::move(row));
  }
  return rows;
}

ojson presentation_json(const Presentation& p) {
  ojson j;
  j["generators"] = p.generators;
  ojson rels = ojson::array();
  for (const Word& r : p.relators) rels.push_back(print_word(r, p.generators));
  j["relators"] = std::move(rels);
  return j;
}

ojson h1_json(const H1Report& r) {
  ojson j;
  j["dimZ1"] = r.dimZ1;
  j["dimB1"] = r.dimB1;
  j["dimH1"] = r.dimH1;
  j["module_dim"] = r.module_dim;
  j["is_even"] = r.is_even;
  if (!r.at.empty()) j["at"] = r.at;
  return j;
}

ojson avoidance_json(const AvoidanceCertificate& cert,
                     const std::vector<std::string>& gen_names) {
  ojson j;
  j["index"] = cert.index;
  ojson qs = ojson::array();
  for (const QuotientUse& q : cert.quotients) {
    ojson qj;
    qj["description"] = q.description;
    qj["target"] = q.target.name();
    qj["order"] = q.target.order();
    ojson imgs = ojson::array();
    for (int g : q.gen_images) imgs.push_back(q.target.label(g));
    qj["generator_images"] = std::move(imgs);
    ojson table = ojson::array();
    for (int a = 0; a < q.target.order(); ++a) {
      ojson row = ojson::array();
      for (int b = 0; b < q.target.order(); ++b) row.push_back(q.target.mul(a, b));
      table.push_back(std::move(row));
    }
    qj["table"] = std::move(table);
    qs.push_back(std::move(qj));
  }
  j["quotients"] = std::move(qs);
  ojson es = ojson::array();
  for (const auto& e : cert.elements) {
    ojson ej;
    ej["element"] = print_word(e.element, gen_names);
    ej["claimed_order"] = e.claimed_order.str();
    ej["quotient"] = e.quotient;
    ej["image"] = e.image_label;
    ej["image_order"] = e.image_order;
    es.push_back(std::move(ej));
  }
  j["elements"] = std::move(es);
  return j;
}

ojson group_report_json(const Presentation& p, const AbelianizationData& ab) {
  ojson j;
  j["schema"] = kReportSchema;
  j["command"] = "group";
  j["generators"] = p.ngens();
  j["relators"] = p.relators.size();
  j["betti1"] = static_cast<long>(ab.rank);
  j["torsion"] = ints_json(ab.torsion);
  j["presentation"] = presentation_json(p);
  return j;
}

ojson cover_json(const CoverReport& r) {
  ojson j;
  j["schema"] = kReportSchema;
  j["command"] = "cover";
  j["params"] = {{"N", r.N}, {"branch_points", r.branch_points}};
  j["effective_branch_points"] = r.effective_branch_points;
  j["genus"] = r.genus;
  j["betti1"] = r.betti1;
  j["torsion_free"] = r.torsion_free;
  j["action_matrix"] = matrix_json(r.action_matrix);
  j["action_order_ok"] = r.action_order_ok;
  j["action_fixed_space_zero"] = r.action_fixed_space_zero;
  if (!r.warning.empty()) j["warning"] = r.warning;
  return j;
}

std::string cover_markdown(const CoverReport& r) {
  std::ostringstream out;
  out << "# Cyclic cover report\n\n";
  out << "| quantity | value |\n|---|---|\n";
  out << "| N | " << r.N << " |\n";
  out << "| branch points | " << r.branch_points << " |\n";
  out << "| effective branch points | " << r.effective_branch_points << " |\n";
  out << "| genus | " << r.genus << " |\n";
  out << "| betti1 | " << r.betti1 << " |\n";
  out << "| deck action order ok | " << (r.action_order_ok ? "yes" : "no") << " |\n";
  out << "| H1 fixed space zero | " << (r.action_fixed_space_zero ? "yes" : "no")
      << " |\n";
  if (!r.warning.empty()) out << "\n> " << r.warning << "\n";
  return out.str();
}

ojson theorem1_json(const Theorem1Report& r) {
  ojson j;
  j["schema"] = kReportSchema;
  j["command"] = "theorem1";
  j["params"] = {{"N", r.params.N},
                 {"deg_f", r.params.deg_f},
                 {"samples", r.params.samples},
                 {"seed", r.params.seed}};
  j["cover"] = {{"genus", r.genus},
                {"betti1", r.betti1_cover},
                {"effective_branch_points", r.effective_branch_points},
                {"action_matrix", matrix_json(r.action_matrix)},
                {"action_order_ok", r.action_order_ok},
                {"action_fixed_space_zero", r.action_fixed_space_zero}};
  j["total_group"] = {{"generators", r.total_generators},
                      {"relators", r.total_relators},
                      {"betti1", r.betti1_total},
                      {"torsion", ints_json(r.torsion_total)}};
  ojson samples = ojson::array();
  for (const Theorem1Sample& s : r.samples) {
    ojson sj;
    sj["chi"] = rats_json(s.chi);
    sj["orbit_distinct"] = s.orbit_distinct;
    if (s.orbit_distinct) {
      sj["valid"] = s.valid;
      sj["irreducible"] = s.irreducible;
      sj["algebra_dim"] = s.algebra_dim;
      sj["res_matches_eq_v"] = s.res_matches_eq_v;
      sj["twist_equivalent"] = s.twist_equivalent;
      sj["h1"] = h1_json(s.h1);
      sj["h1_oracle"] = s.h1_oracle;
      sj["h1_matches_oracle"] = s.h1_matches_oracle;
      sj["h1_ge_2g"] = s.h1_ge_2g;
    }
    sj["certified"] = s.certified;
    samples.push_back(std::move(sj));
  }
  j["samples"] = std::move(samples);
  long distinct = 0;
  for (const Theorem1Sample& s : r.samples)
    if (s.orbit_distinct) ++distinct;
  j["genericity"] = {{"orbit_distinct_samples", distinct},
                     {"total_samples", static_cast<long>(r.samples.size())}};
  j["equivalence"] = {{"matrix", bools_json(r.equivalent)},
                      {"same_orbit", bools_json(r.same_orbit)},
                      {"matches_orbits", r.equivalence_matches_orbits}};
  j["all_certified"] = r.all_certified;
  if (!r.failure.empty()) j["failure"] = r.failure;
  return j;
}

std::string theorem1_markdown(const Theorem1Report& r) {
  std::ostringstream out;
  out << "# Induced family report (N = " << r.params.N << ", deg f = " << r.params.deg_f
      << ", seed = " << r.params.seed << ")\n\n";
  out << "- genus: " << r.genus << " (cover betti1 = " << r.betti1_cover << ")\n";
  out << "- total group betti1: " << r.betti1_total << "\n";
  out << "- all certified: " << (r.all_certified ? "yes" : "no") << "\n\n";
  out << "| sample | orbit distinct | irreducible | Res matches | dim H1 | even | >= 2g |\n";
  out << "|---|---|---|---|---|---|---|\n";
  for (size_t i = 0; i < r.samples.size(); ++i) {
    const Theorem1Sample& s = r.samples[i];
    out << "| " << i << " | " << (s.orbit_distinct ? "yes" : "no") << " | "
        << (s.irreducible ? "yes" : "no") << " | " << (s.res_matches_eq_v ? "yes" : "no")
        << " | " << s.h1.dimH1 << " | " << (s.h1.is_even ? "yes" : "no") << " | "
        << (s.h1_ge_2g ? "yes" : "no") << " |\n";
  }
  if (!r.failure.empty()) out << "\nFirst failure: " << r.failure << "\n";
  return out.str();
}

ojson descent_json(const DescentReport& r) {
  ojson j;
  j["schema"] = kReportSchema;
  j["command"] = "descent";
  j["input_group"] = presentation_json(r.input_group);
  ojson stages = ojson::array();
  for (const DescentStage& st : r.stages)
    stages.push_back({{"name", st.name}, {"ok", st.ok}, {"detail", st.detail}});
  j["stages"] = std::move(stages);
  j["quotient_group"] = presentation_json(r.quotient_group);
  j["index2"] = r.index2;
  j["kernel"] = {{"generators", r.kernel_generators}, {"relators", r.kernel_relators}};
  if (r.has_avoidance) {
    // Avoidance elements are words over the index-two kernel generators.
    std::vector<std::string> names;
    for (long i = 0; i < r.kernel_generators; ++i) names.push_back("k" + std::to_string(i));
    if (!r.avoidance.elements.empty() || !r.avoidance.quotients.empty())
      j["avoidance"] = avoidance_json(r.avoidance, names);
    else
      j["avoidance"] = {{"index", r.avoidance.index}};
  }
  ojson chars = ojson::array();
  for (const DescentCharRecord& c : r.characters) {
    ojson cj;
    cj["chi"] = rats_json(c.chi);
    cj["induced_dim"] = c.induced_dim;
    cj["character_valid"] = c.w_valid;
    cj["inner_induction_valid"] = c.inner_valid;
    cj["valid"] = c.valid;
    cj["monodromy_predicates"] = c.picard_ok;
    cj["irreducible"] = c.irreducible;
    cj["algebra_dim"] = c.algebra_dim;
    chars.push_back(std::move(cj));
  }
  j["characters"] = std::move(chars);
  j["equivalence_matrix"] = bools_json(r.equivalent);
  j["induced_pairwise_distinct"] = r.induced_pairwise_distinct;
  j["all_ok"] = r.all_ok;
  if (!r.failure.empty()) j["failure"] = r.failure;
  j["note"] =
      "avoidance certificates place the listed elements in explicit finite "
      "quotients; the full profinite kernel is not computed";
  return j;
}

std::string descent_markdown(const DescentReport& r) {
  std::ostringstream out;
  out << "# Descent chain report\n\n";
  out << "| stage | ok | detail |\n|---|---|---|\n";
  for (const DescentStage& st : r.stages)
    out << "| " << st.name << " | " << (st.ok ? "yes" : "no") << " | " << st.detail
        << " |\n";
  out << "\n- induced dimension: "
      << (r.characters.empty() ? 0 : r.characters[0].induced_dim) << "\n";
  out << "- pairwise distinct: " << (r.induced_pairwise_distinct ? "yes" : "no") << "\n";
  out << "- all ok: " << (r.all_ok ? "yes" : "no") << "\n";
  if (!r.failure.empty()) out << "- first failure: " << r.failure << "\n";
  return out.str();
}

ojson h1_report_json(const H1Report& r, const std::string& group_file) {
  ojson j;
  j["schema"] = kReportSchema;
  j["command"] = "h1";
  j["group_file"] = group_file;
  j.update(h1_json(r));
  return j;
}

ojson rep_json(const Representation& r) {
  ojson j;
  j["dim"] = r.dim();
  ojson mats;
  for (int g = 0; g < r.group().ngens(); ++g)
    mats[r.group().generators[static_cast<size_t>(g)]] = matrix_json(r.mat(g));
  j["matrices"] = std::move(mats);
  return j;
}

Representation rep_from_json(const ojson& j, const Presentation& group) {
  if (!j.contains("matrices")) throw Error("representation JSON: missing 'matrices'");
  const ojson& mats = j.at("matrices");
  std::vector<RatMat> ms;
  for (const std::string& name : group.generators) {
    if (!mats.contains(name))
      throw Error("representation JSON: missing matrix for generator '" + name + "'");
    const ojson& mj = mats.at(name);
    Index rows = static_cast<Index>(mj.size());
    if (rows == 0) throw Error("representation JSON: empty matrix");
    Index cols = static_cast<Index>(mj.at(0).size());
    RatMat m(rows, cols);
    for (Index i = 0; i < rows; ++i) {
      if (static_cast<Index>(mj.at(static_cast<size_t>(i)).size()) != cols)
        throw Error("representation JSON: ragged matrix");
      for (Index c = 0; c < cols; ++c) {
        const ojson& cell = mj.at(static_cast<size_t>(i)).at(static_cast<size_t>(c));
        if (cell.is_string())
          m(i, c) = parse_rat(cell.get<std::string>());
        else
          m(i, c) = Rat(cell.get<long>());
      }
    }
    ms.push_back(std::move(m));
  }
  return Representation(group, std::move(ms));
}

}  // namespace charvar
