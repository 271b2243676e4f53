#include "wordlab/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "wordlab/errors.hpp"
#include "wordlab/reports.hpp"

#ifndef WORDLAB_VERSION
#define WORDLAB_VERSION "0.0.0"
#endif

namespace wordlab {

namespace {

struct Options {
  std::string group;
  std::string gens_file;
  std::string word;
  std::string format = "json";
  long long budget = 0;  // 0 = default or WORDLAB_BUDGET
  std::size_t order_cap = FiniteGroup::kDefaultOrderCap;
  int jobs = 1;
  std::string info_name;
  std::vector<std::string> assigns;
  std::string mode = "full";
  bool lift = false;
  bool modp = false;
  std::string D;
  std::string C;
  long long e = 1;
  std::string exponents;
  std::string groups;
  std::string class_union;
};

long long default_budget() {
  if (const char* env = std::getenv("WORDLAB_BUDGET")) {
    char* end = nullptr;
    const long long v = std::strtoll(env, &end, 10);
    if (end == env || *end != '\0' || v <= 0)
      throw ValidationError("WORDLAB_BUDGET must be a positive integer");
    return v;
  }
  return EnumOptions{}.budget;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    const auto a = item.find_first_not_of(" \t");
    const auto b = item.find_last_not_of(" \t");
    if (a == std::string::npos) continue;
    out.push_back(item.substr(a, b - a + 1));
  }
  return out;
}

FiniteGroup load_group(const Options& o, const std::string& positional = "") {
  const int sources =
      !positional.empty() + !o.group.empty() + !o.gens_file.empty();
  if (sources == 0)
    throw ValidationError("a group is required: --group NAME or --gens-file FILE");
  if (sources > 1) throw ValidationError("give exactly one group source");
  if (!positional.empty()) return catalog_group(positional, o.order_cap);
  if (!o.group.empty()) return catalog_group(o.group, o.order_cap);
  std::ifstream in(o.gens_file);
  if (!in) throw ValidationError("cannot open " + o.gens_file);
  std::vector<Permutation> gens = read_generator_file(in);
  return FiniteGroup::from_generators(
      std::move(gens), std::filesystem::path(o.gens_file).stem().string(),
      o.order_cap);
}

Word required_word(const Options& o) {
  if (o.word.empty()) throw ValidationError("a word is required: --word TEXT");
  return parse_word(o.word);
}

Assignment parse_assignments(const FiniteGroup& G,
                             const std::vector<std::string>& items) {
  Assignment a;
  for (const std::string& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos)
      throw ValidationError("--assign expects name=cycles, got \"" + item + "\"");
    const std::string name = item.substr(0, eq);
    const std::string cyc = item.substr(eq + 1);
    const Permutation p = Permutation::from_cycles(cyc, G.degree());
    const int idx = G.index_of(p);
    if (idx < 0)
      throw ValidationError("\"" + cyc + "\" is not an element of " + G.name());
    a[name] = idx;
  }
  return a;
}

int find_class(const ClassTable& T, const std::string& name) {
  const int c = T.find(name);
  if (c >= 0) return c;
  std::string known;
  for (const std::string& n : T.names) {
    if (!known.empty()) known += ", ";
    known += n;
  }
  throw ValidationError("no class named " + name + "; classes are: " + known);
}

std::vector<int> parse_class_union(const ClassTable& T, const std::string& spec) {
  const std::vector<std::string> names = split_list(spec);
  if (names.empty()) throw ValidationError("--class-union needs at least one class");
  std::vector<int> members;
  for (const std::string& name : names) {
    const int c = find_class(T, name);
    members.insert(members.end(), T.classes[c].begin(), T.classes[c].end());
  }
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return members;
}

std::vector<long long> parse_exponents(const std::string& spec) {
  const std::vector<std::string> items = split_list(spec);
  if (items.empty()) throw ValidationError("--exponents needs at least one integer");
  std::vector<long long> out;
  for (const std::string& item : items) {
    char* end = nullptr;
    const long long v = std::strtoll(item.c_str(), &end, 10);
    if (end == item.c_str() || *end != '\0')
      throw ValidationError("bad exponent \"" + item + "\"");
    out.push_back(v);
  }
  return out;
}

std::vector<std::string> default_corollary_groups() {
  std::vector<std::string> out;
  for (const std::string& name : catalog_roster())
    if (catalog_group(name).order() <= 24) out.push_back(name);
  return out;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  Options o;
  CLI::App app{"word maps, rationality and character sums on finite groups"};
  app.name("wordlab");

  app.add_option("--group", o.group,
                 "catalog group: C<n>, D<n>, S<n>, A<n>, Q8, SL(2,3), PSL(2,p)");
  app.add_option("--gens-file", o.gens_file,
                 "file with one permutation per line in cycle notation");
  app.add_option("--word", o.word, "word over x1, x2, ... e.g. \"[x1,x2]\"");
  app.add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"json", "table"}));
  app.add_option("--budget", o.budget, "max word evaluations per enumeration")
      ->check(CLI::PositiveNumber);
  app.add_option("--order-cap", o.order_cap,
                 "refuse groups whose closure grows past this order")
      ->check(CLI::PositiveNumber);
  app.add_option("--jobs", o.jobs, "parallel enumeration threads")
      ->check(CLI::PositiveNumber);

  CLI::App* group_cmd = app.add_subcommand("group", "inspect groups");
  CLI::App* group_info =
      group_cmd->add_subcommand("info", "order, exponent, classes, generators");
  group_info->add_option("name", o.info_name, "catalog group name");
  CLI::App* group_list = group_cmd->add_subcommand("list", "the built-in catalog");
  group_cmd->require_subcommand(1);

  CLI::App* word_cmd = app.add_subcommand("word", "evaluate and enumerate words");
  CLI::App* word_eval =
      word_cmd->add_subcommand("eval", "value under an explicit assignment");
  word_eval->add_option("--assign", o.assigns, "binding name=cycles (repeatable)")
      ->required();
  CLI::App* word_image_cmd = word_cmd->add_subcommand("image", "all word values");
  CLI::App* word_verbal =
      word_cmd->add_subcommand("verbal", "subgroup generated by the image");
  word_cmd->require_subcommand(1);

  CLI::App* rational_cmd =
      app.add_subcommand("rational", "rationality verdict for a word on a group");
  rational_cmd->add_option("--mode", o.mode, "weak or full")
      ->check(CLI::IsMember({"weak", "full"}));

  CLI::App* chartab_cmd =
      app.add_subcommand("chartab", "character table by eigenspace splitting mod p");
  chartab_cmd->add_flag("--lift", o.lift, "complex-lifted table (default)");
  chartab_cmd->add_flag("--mod-p", o.modp, "table of residues mod p");

  CLI::App* verify_cmd = app.add_subcommand("verify", "theorem-level checks");
  CLI::App* verify_ra = verify_cmd->add_subcommand(
      "ra", "triple counts: character formula vs brute force, twisted by e");
  verify_ra->add_option("--D", o.D, "first class name")->required();
  verify_ra->add_option("--C", o.C, "second class name")->required();
  verify_ra->add_option("--e", o.e, "exponent >= 1 (normalized to one coprime to |G|)")
      ->required();
  CLI::App* verify_cor = verify_cmd->add_subcommand(
      "corollary", "rationality of the nested power-commutator word");
  verify_cor->add_option("--exponents", o.exponents, "n1,n2,... (positive)")
      ->required();
  verify_cor->add_option("--groups", o.groups,
                         "comma list; default: catalog groups of order <= 24");
  CLI::App* verify_con = verify_cmd->add_subcommand(
      "concise", "conciseness inequalities for one group and word");
  verify_cmd->require_subcommand(1);

  CLI::App* check_cmd = app.add_subcommand("check", "set-level predicates");
  CLI::App* check_pc = check_cmd->add_subcommand(
      "power-closed", "closure of a class union under coprime powers");
  check_pc->add_option("--class-union", o.class_union, "class names, e.g. 1A,3A")
      ->required();
  CLI::App* check_fam = check_cmd->add_subcommand(
      "fam-bound", "image-count bound for multilinear commutator words");
  check_cmd->require_subcommand(1);

  app.require_subcommand(1);
  for (CLI::App* sub : {group_cmd, group_info, group_list, word_cmd, word_eval,
                        word_image_cmd, word_verbal, rational_cmd, chartab_cmd,
                        verify_cmd, verify_ra, verify_cor, verify_con, check_cmd,
                        check_pc, check_fam})
    sub->fallthrough();

  try {
    std::vector<const char*> argv;
    argv.push_back("wordlab");
    for (const std::string& s : args) argv.push_back(s.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    EnumOptions opts;
    opts.budget = o.budget > 0 ? o.budget : default_budget();
    opts.jobs = o.jobs;

    const auto t0 = std::chrono::steady_clock::now();
    ojson payload;
    bool has_verdict = false;
    bool verdict = true;

    if (group_info->parsed()) {
      const FiniteGroup G = load_group(o, o.info_name);
      payload = group_info_payload(G, conjugacy_classes(G));
    } else if (group_list->parsed()) {
      payload = group_list_payload();
    } else if (word_eval->parsed()) {
      const FiniteGroup G = load_group(o);
      const Word w = required_word(o);
      const Assignment a = parse_assignments(G, o.assigns);
      payload = word_eval_payload(G, w, a, evaluate_word(G, w, a));
    } else if (word_image_cmd->parsed()) {
      const FiniteGroup G = load_group(o);
      const Word w = required_word(o);
      payload = word_image_payload(G, conjugacy_classes(G), w,
                                   word_image(G, w, opts));
    } else if (word_verbal->parsed()) {
      const FiniteGroup G = load_group(o);
      const Word w = required_word(o);
      const ElementSet image = word_image(G, w, opts);
      payload = verbal_payload(G, w, image,
                               subgroup_generated(G, image.members));
    } else if (rational_cmd->parsed()) {
      const FiniteGroup G = load_group(o);
      const Word w = required_word(o);
      const RationalityVerdict v = o.mode == "weak"
                                       ? weakly_rational_on(G, w, opts)
                                       : rational_on(G, w, opts);
      payload = rationality_payload(v);
      has_verdict = true;
      verdict = v.holds;
    } else if (chartab_cmd->parsed()) {
      if (o.lift && o.modp)
        throw ValidationError("choose one of --lift and --mod-p");
      const FiniteGroup G = load_group(o);
      const ClassTable T = conjugacy_classes(G);
      const ModPCharacterTable t = character_table_mod_p(G, T);
      payload = o.modp ? chartab_modp_payload(G, T, t)
                       : chartab_lift_payload(G, T, lift_character_table(G, T, t));
    } else if (verify_ra->parsed()) {
      const FiniteGroup G = load_group(o);
      const ClassTable T = conjugacy_classes(G);
      const ComplexCharacterTable ct =
          lift_character_table(G, T, character_table_mod_p(G, T));
      const TripleCountReport r =
          galois_check(G, T, ct, find_class(T, o.D), find_class(T, o.C), o.e);
      payload = triple_payload(G.name(), r);
      has_verdict = true;
      verdict = r.holds;
    } else if (verify_cor->parsed()) {
      const std::vector<std::string> groups = o.groups.empty()
                                                  ? default_corollary_groups()
                                                  : split_list(o.groups);
      const CorollaryReport r =
          corollary_check(parse_exponents(o.exponents), groups, opts);
      payload = corollary_payload(r);
      has_verdict = true;
      verdict = r.aggregate;
    } else if (verify_con->parsed()) {
      const FiniteGroup G = load_group(o);
      const Word w = required_word(o);
      const ConciseReport r = lemma_concise_report(G, w, opts);
      payload = concise_payload(r);
      has_verdict = true;
      verdict = r.all_pass;
    } else if (check_fam->parsed()) {
      const FiniteGroup G = load_group(o);
      const Word w = required_word(o);
      const FamBoundReport r = fam_bound_check(G, w, opts);
      payload = fam_bound_payload(r);
      has_verdict = true;
      verdict = r.holds;
    } else if (check_pc->parsed()) {
      const FiniteGroup G = load_group(o);
      const ClassTable T = conjugacy_classes(G);
      const std::vector<int> members = parse_class_union(T, o.class_union);
      const PowerClosedReport r = power_closed(G, members);
      payload = power_closed_payload(G, o.class_union, members, r);
      has_verdict = true;
      verdict = r.power_closed;
    } else {
      throw ValidationError("no workflow selected");
    }

    if (o.format == "table") {
      out << render_table(payload);
    } else {
      const double elapsed =
          std::chrono::duration<double, std::milli>(
              std::chrono::steady_clock::now() - t0)
              .count();
      ojson doc;
      doc["tool"] = "wordlab";
      doc["version"] = WORDLAB_VERSION;
      doc["command"] = args;
      doc["elapsed_ms"] = elapsed;
      doc["payload"] = std::move(payload);
      out << doc.dump(2) << "\n";
    }
    return has_verdict && !verdict ? 1 : 0;
  } catch (const BudgetError& e) {
    err << "budget refusal: " << e.what() << "\n";
    return 3;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const SizeLimitError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ClassificationError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 4;
  }
}

}  // namespace wordlab
