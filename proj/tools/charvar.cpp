#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "charvar/report.hpp"

namespace {

using namespace charvar;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write file: " + path);
  out << text;
}

std::string md_path_for(const std::string& json_path) {
  auto dot = json_path.rfind('.');
  std::string stem = dot == std::string::npos ? json_path : json_path.substr(0, dot);
  return stem + ".md";
}

void emit(const ojson& j, const std::string& md, const std::string& out,
          const std::string& format) {
  if (!out.empty()) {
    write_file(out, j.dump(2) + "\n");
    if (!md.empty()) write_file(md_path_for(out), md);
    std::cout << "wrote " << out << "\n";
  } else if (format == "md" && !md.empty()) {
    std::cout << md;
  } else {
    std::cout << j.dump(2) << "\n";
  }
}

Word parse_word_checked(const std::string& text, const Presentation& p,
                        const std::string& what) {
  try {
    return parse_word(text, p);
  } catch (const ParseError& e) {
    throw ConfigError(what + ": " + e.what());
  }
}

DescentInput descent_input_from_json(const ojson& cfg) {
  DescentInput in;
  if (!cfg.contains("presentation"))
    throw ConfigError("descent config: missing 'presentation'");
  in.p = parse_presentation(cfg.at("presentation").get<std::string>());
  auto words = [&in](const ojson& arr, const char* what) {
    std::vector<Word> ws;
    for (const auto& w : arr)
      ws.push_back(parse_word_checked(w.get<std::string>(), in.p, what));
    return ws;
  };
  if (cfg.contains("gamma1")) in.gamma1 = words(cfg.at("gamma1"), "gamma1");
  if (cfg.contains("gamma2")) in.gamma2 = words(cfg.at("gamma2"), "gamma2");
  in.parity.assign(static_cast<size_t>(in.p.ngens()), 0);
  if (!cfg.contains("parity")) throw ConfigError("descent config: missing 'parity'");
  for (const auto& [name, v] : cfg.at("parity").items()) {
    int g = in.p.gen_index(name);
    if (g < 0) throw ConfigError("descent config: unknown generator '" + name + "'");
    in.parity[static_cast<size_t>(g)] = v.get<int>();
  }
  if (cfg.contains("links"))
    for (const auto& l : cfg.at("links")) {
      Word w = parse_word_checked(l.at("word").get<std::string>(), in.p, "link");
      in.links.emplace_back(std::move(w), Int(l.at("order").get<long>()));
    }
  if (cfg.contains("characters")) in.characters = cfg.at("characters").get<int>();
  if (cfg.contains("seed")) in.seed = cfg.at("seed").get<std::uint64_t>();
  if (cfg.contains("budget_degree"))
    in.budget.max_degree = cfg.at("budget_degree").get<int>();
  if (cfg.contains("budget_trials"))
    in.budget.max_trials = cfg.at("budget_trials").get<long>();
  if (cfg.contains("allow_any_link_order"))
    in.allow_any_link_order = cfg.at("allow_any_link_order").get<bool>();
  if (cfg.contains("test_rep")) {
    Representation r = rep_from_json(cfg.at("test_rep"), in.p);
    in.test_rep = r.matrices();
  }
  return in;
}

// Lexicographic rank of a one-line permutation; matches the element order of
// FiniteTarget::symmetric.
int perm_rank(const std::vector<int>& p) {
  const int d = static_cast<int>(p.size());
  std::vector<long> fact(static_cast<size_t>(d + 1), 1);
  for (int i = 1; i <= d; ++i)
    fact[static_cast<size_t>(i)] = fact[static_cast<size_t>(i - 1)] * i;
  long rank = 0;
  for (int i = 0; i < d; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < d; ++j)
      if (p[static_cast<size_t>(j)] < p[static_cast<size_t>(i)]) ++smaller;
    rank += smaller * fact[static_cast<size_t>(d - 1 - i)];
  }
  return static_cast<int>(rank);
}

FiniteHom hom_from_json(const ojson& j, const Presentation& p) {
  const ojson& t = j.at("target");
  std::string type = t.at("type").get<std::string>();
  FiniteTarget target = FiniteTarget::cyclic(1);
  bool symmetric = false;
  int degree = 0;
  if (type == "cyclic") {
    target = FiniteTarget::cyclic(t.at("n").get<long>());
  } else if (type == "symmetric") {
    degree = t.at("degree").get<int>();
    target = FiniteTarget::symmetric(degree);
    symmetric = true;
  } else {
    throw ConfigError("hom: unknown target type '" + type + "'");
  }
  std::vector<int> images(static_cast<size_t>(p.ngens()), target.identity());
  for (const auto& [name, v] : j.at("images").items()) {
    int g = p.gen_index(name);
    if (g < 0) throw ConfigError("hom: unknown generator '" + name + "'");
    if (symmetric) {
      std::vector<int> perm = v.get<std::vector<int>>();
      if (static_cast<int>(perm.size()) != degree)
        throw ConfigError("hom: permutation length must equal the degree");
      images[static_cast<size_t>(g)] = perm_rank(perm);
    } else {
      long r = v.get<long>() % target.order();
      if (r < 0) r += target.order();
      images[static_cast<size_t>(g)] = static_cast<int>(r);
    }
  }
  return FiniteHom{p, std::move(target), std::move(images)};
}

std::vector<Rat> parse_char_list(const std::string& csv) {
  std::vector<Rat> out;
  std::istringstream in(csv);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    out.push_back(parse_rat(item));
  }
  return out;
}

int run(int argc, char** argv) {
  CLI::App app{"exact certificates for groups, covers, and induced representation families"};
  app.require_subcommand(1);

  std::string out_path, format = "json";

  // group
  auto* cmd_group = app.add_subcommand("group", "abelianization of a presentation file");
  std::string group_file;
  cmd_group->add_option("file", group_file, "presentation file")->required();
  cmd_group->add_option("--out", out_path, "write JSON report here");
  cmd_group->add_option("--format", format, "json|md");

  // cover
  auto* cmd_cover = app.add_subcommand("cover", "cyclic cover of the line: genus and deck action");
  long cov_N = 2, cov_b = 6;
  std::string cover_spec;
  cmd_cover->add_option("--N", cov_N, "cover degree");
  cmd_cover->add_option("--branch,--degf", cov_b, "number of finite branch points (deg f)");
  cmd_cover->add_option("--spec", cover_spec, "JSON file {\"N\": int, \"branch_points\": int}");
  cmd_cover->add_option("--out", out_path, "write JSON report here");
  cmd_cover->add_option("--format", format, "json|md");

  // theorem1
  auto* cmd_t1 = app.add_subcommand("theorem1", "certified induced family over the cover");
  Theorem1Params t1;
  cmd_t1->add_option("--N", t1.N, "cover degree (>= 2)");
  cmd_t1->add_option("--degf", t1.deg_f, "deg f (finite branch points)");
  cmd_t1->add_option("--samples", t1.samples, "number of sampled characters");
  cmd_t1->add_option("--seed", t1.seed, "PRNG seed");
  cmd_t1->add_option("--out", out_path, "write JSON report here (plus .md summary)");
  cmd_t1->add_option("--format", format, "json|md");

  // descent
  auto* cmd_desc = app.add_subcommand("descent", "quotient -> index-2 -> avoidance -> induction chain");
  std::string desc_config, desc_preset;
  std::uint64_t desc_seed = 0;
  int desc_budget_degree = 0;
  bool desc_seed_set = false;
  cmd_desc->add_option("--config", desc_config, "JSON chain description");
  cmd_desc->add_option("--preset", desc_preset, "toy|s3 built-in instances");
  cmd_desc->add_option("--seed", desc_seed, "PRNG seed override")
      ->each([&desc_seed_set](const std::string&) { desc_seed_set = true; });
  cmd_desc->add_option("--budget-degree", desc_budget_degree,
                       "max symmetric-group degree for the avoidance search");
  cmd_desc->add_option("--out", out_path, "write JSON report here (plus .md summary)");
  cmd_desc->add_option("--format", format, "json|md");

  // h1
  auto* cmd_h1 = app.add_subcommand("h1", "twisted H1 dimensions");
  std::string h1_group, h1_rep;
  cmd_h1->add_option("--group", h1_group, "presentation file")->required();
  cmd_h1->add_option("--rep", h1_rep,
                     "representation JSON; conjugation module at this point");
  cmd_h1->add_option("--out", out_path, "write JSON report here");
  cmd_h1->add_option("--format", format, "json|md");

  // induce
  auto* cmd_ind = app.add_subcommand("induce", "induce a kernel character up to the ambient group");
  std::string ind_group, ind_hom, ind_char, ind_rep;
  cmd_ind->add_option("--group", ind_group, "presentation file")->required();
  cmd_ind->add_option("--hom", ind_hom, "finite quotient JSON")->required();
  cmd_ind->add_option("--char", ind_char, "comma separated character values on the kernel H1 basis");
  cmd_ind->add_option("--rep", ind_rep, "representation JSON over the kernel generators");
  cmd_ind->add_option("--out", out_path, "write JSON here");

  CLI11_PARSE(app, argc, argv);

  if (cmd_group->parsed()) {
    Presentation p = parse_presentation(read_file(group_file));
    AbelianizationData ab = abelianization(p);
    ojson j = group_report_json(p, ab);
    std::ostringstream md;
    md << "# Group report\n\n- generators: " << p.ngens()
       << "\n- relators: " << p.relators.size() << "\n- betti1 (d1): " << ab.rank
       << "\n- torsion: " << ints_json(ab.torsion).dump() << "\n";
    emit(j, md.str(), out_path, format);
    return 0;
  }

  if (cmd_cover->parsed()) {
    if (!cover_spec.empty()) {
      ojson spec = ojson::parse(read_file(cover_spec));
      cov_N = spec.at("N").get<long>();
      cov_b = spec.at("branch_points").get<long>();
    }
    CoverReport r = build_cover_report(cov_N, cov_b);
    emit(cover_json(r), cover_markdown(r), out_path, format);
    return 0;
  }

  if (cmd_t1->parsed()) {
    Theorem1Report r = build_theorem1(t1);
    emit(theorem1_json(r), theorem1_markdown(r), out_path, format);
    if (!r.all_certified) {
      std::cerr << "certificate failed: " << r.failure << "\n";
      return 1;
    }
    return 0;
  }

  if (cmd_desc->parsed()) {
    DescentInput in;
    if (!desc_config.empty())
      in = descent_input_from_json(ojson::parse(read_file(desc_config)));
    else if (desc_preset == "toy")
      in = descent_toy_input();
    else if (desc_preset == "s3")
      in = descent_s3_input();
    else
      throw ConfigError("descent: give --config FILE or --preset toy|s3");
    if (desc_seed_set) in.seed = desc_seed;
    if (desc_budget_degree > 0) in.budget.max_degree = desc_budget_degree;
    DescentReport r = descent_chain(in);
    emit(descent_json(r), descent_markdown(r), out_path, format);
    if (!r.all_ok) {
      std::cerr << "certificate failed: " << r.failure << "\n";
      return 1;
    }
    return 0;
  }

  if (cmd_h1->parsed()) {
    Presentation p = parse_presentation(read_file(h1_group));
    H1Report r;
    if (h1_rep.empty()) {
      r = h1_dimension(p, ModuleAction::trivial(p.ngens()), "trivial 1-dimensional module");
    } else {
      Representation rep = rep_from_json(ojson::parse(read_file(h1_rep)), p);
      if (auto bad = rep.validate())
        throw Error("representation fails relator " + *bad);
      r = local_charvar_dim(rep);
    }
    emit(h1_report_json(r, h1_group), "", out_path, format);
    return 0;
  }

  if (cmd_ind->parsed()) {
    Presentation p = parse_presentation(read_file(ind_group));
    FiniteHom hom = hom_from_json(ojson::parse(read_file(ind_hom)), p);
    SubgroupData s = kernel_subgroup(p, hom);
    Representation w;
    if (!ind_char.empty()) {
      std::vector<Rat> values = parse_char_list(ind_char);
      w = character_rep(make_character(s.kernel_presentation, std::move(values)));
    } else if (!ind_rep.empty()) {
      w = rep_from_json(ojson::parse(read_file(ind_rep)), s.kernel_presentation);
    } else {
      throw ConfigError("induce: give --char or --rep");
    }
    if (auto bad = w.validate())
      throw Error("kernel representation fails relator " + *bad);
    Representation v = induce(s, w);
    ojson j;
    j["schema"] = kReportSchema;
    j["command"] = "induce";
    j["index"] = s.index();
    j["kernel_presentation"] = presentation_json(s.kernel_presentation);
    j["induced"] = rep_json(v);
    auto bad = v.validate();
    j["valid"] = !bad.has_value();
    emit(j, "", out_path, format);
    if (bad) {
      std::cerr << "induced representation fails relator " << *bad << "\n";
      return 1;
    }
    return 0;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const charvar::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const charvar::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: bad JSON input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
