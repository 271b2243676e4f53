#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wordlab/errors.hpp"
#include "wordlab/numtheory.hpp"
#include "wordlab/reports.hpp"

namespace py = pybind11;

namespace {

using namespace wordlab;

py::object to_py(const ojson& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

EnumOptions make_opts(long long budget, int jobs) {
  EnumOptions o;
  if (budget > 0) o.budget = budget;
  o.jobs = jobs < 1 ? 1 : jobs;
  return o;
}

int element_index(const FiniteGroup& G, const std::string& cycles) {
  const Permutation p = Permutation::from_cycles(cycles, G.degree());
  const int idx = G.index_of(p);
  if (idx < 0)
    throw ValidationError("\"" + cycles + "\" is not an element of " + G.name());
  return idx;
}

Assignment to_assignment(const FiniteGroup& G,
                         const std::map<std::string, std::string>& binding) {
  Assignment a;
  for (const auto& [name, cyc] : binding) a[name] = element_index(G, cyc);
  return a;
}

}  // namespace

PYBIND11_MODULE(wordlab, m) {
  m.doc() = "word maps, rationality and character sums on finite groups";

  py::register_exception<BudgetError>(m, "BudgetError", PyExc_RuntimeError);
  py::register_exception<InternalError>(m, "InternalError", PyExc_RuntimeError);
  py::register_exception<ClassificationError>(m, "ClassificationError",
                                              PyExc_ValueError);
  py::register_exception<SizeLimitError>(m, "SizeLimitError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "WordParseError", PyExc_ValueError);
  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);

  m.def("catalog", [] { return catalog_roster(); },
        "names of the built-in groups");

  m.def(
      "group_info",
      [](const std::string& group) {
        const FiniteGroup G = catalog_group(group);
        return to_py(group_info_payload(G, conjugacy_classes(G)));
      },
      py::arg("group"));

  m.def(
      "render_word",
      [](const std::string& word) { return parse_word(word).render(); },
      py::arg("word"), "canonical form of a word");

  m.def(
      "evaluate",
      [](const std::string& group, const std::string& word,
         const std::map<std::string, std::string>& assignment) {
        const FiniteGroup G = catalog_group(group);
        const Word w = parse_word(word);
        const Assignment a = to_assignment(G, assignment);
        return to_py(word_eval_payload(G, w, a, evaluate_word(G, w, a)));
      },
      py::arg("group"), py::arg("word"), py::arg("assignment"));

  m.def(
      "word_image",
      [](const std::string& group, const std::string& word, long long budget,
         int jobs) {
        const FiniteGroup G = catalog_group(group);
        const Word w = parse_word(word);
        return to_py(word_image_payload(G, conjugacy_classes(G), w,
                                        wordlab::word_image(G, w, make_opts(budget, jobs))));
      },
      py::arg("group"), py::arg("word"), py::arg("budget") = 0,
      py::arg("jobs") = 1);

  m.def(
      "verbal_subgroup",
      [](const std::string& group, const std::string& word, long long budget,
         int jobs) {
        const FiniteGroup G = catalog_group(group);
        const Word w = parse_word(word);
        const ElementSet image = wordlab::word_image(G, w, make_opts(budget, jobs));
        return to_py(
            verbal_payload(G, w, image, subgroup_generated(G, image.members)));
      },
      py::arg("group"), py::arg("word"), py::arg("budget") = 0,
      py::arg("jobs") = 1);

  m.def(
      "solution_count",
      [](const std::string& group, const std::string& word,
         const std::string& element, long long budget, int jobs) {
        const FiniteGroup G = catalog_group(group);
        return wordlab::solution_count(G, parse_word(word),
                                       element_index(G, element),
                                       make_opts(budget, jobs));
      },
      py::arg("group"), py::arg("word"), py::arg("element") = "()",
      py::arg("budget") = 0, py::arg("jobs") = 1);

  m.def(
      "rational",
      [](const std::string& group, const std::string& word,
         const std::string& mode, long long budget, int jobs) {
        if (mode != "weak" && mode != "full")
          throw ValidationError("mode must be \"weak\" or \"full\"");
        const FiniteGroup G = catalog_group(group);
        const Word w = parse_word(word);
        const EnumOptions opts = make_opts(budget, jobs);
        return to_py(rationality_payload(
            mode == "weak" ? weakly_rational_on(G, w, opts) : rational_on(G, w, opts)));
      },
      py::arg("group"), py::arg("word"), py::arg("mode") = "full",
      py::arg("budget") = 0, py::arg("jobs") = 1);

  m.def(
      "character_table",
      [](const std::string& group, bool lift) {
        const FiniteGroup G = catalog_group(group);
        const ClassTable T = conjugacy_classes(G);
        const ModPCharacterTable t = character_table_mod_p(G, T);
        return to_py(lift ? chartab_lift_payload(G, T, lift_character_table(G, T, t))
                          : chartab_modp_payload(G, T, t));
      },
      py::arg("group"), py::arg("lift") = true);

  m.def(
      "verify_ra",
      [](const std::string& group, const std::string& D, const std::string& C,
         long long e) {
        const FiniteGroup G = catalog_group(group);
        const ClassTable T = conjugacy_classes(G);
        const int d = T.find(D);
        const int c = T.find(C);
        if (d < 0 || c < 0) throw ValidationError("unknown class name");
        const ComplexCharacterTable ct =
            lift_character_table(G, T, character_table_mod_p(G, T));
        return to_py(triple_payload(G.name(), galois_check(G, T, ct, d, c, e)));
      },
      py::arg("group"), py::arg("D"), py::arg("C"), py::arg("e"));

  m.def(
      "verify_corollary",
      [](const std::vector<long long>& exponents,
         const std::optional<std::vector<std::string>>& groups, long long budget,
         int jobs) {
        std::vector<std::string> names;
        if (groups) {
          names = *groups;
        } else {
          for (const std::string& name : catalog_roster())
            if (catalog_group(name).order() <= 24) names.push_back(name);
        }
        return to_py(corollary_payload(
            corollary_check(exponents, names, make_opts(budget, jobs))));
      },
      py::arg("exponents"), py::arg("groups") = std::nullopt,
      py::arg("budget") = 0, py::arg("jobs") = 1);

  m.def(
      "verify_concise",
      [](const std::string& group, const std::string& word, long long budget,
         int jobs) {
        const FiniteGroup G = catalog_group(group);
        return to_py(concise_payload(
            lemma_concise_report(G, parse_word(word), make_opts(budget, jobs))));
      },
      py::arg("group"), py::arg("word"), py::arg("budget") = 0,
      py::arg("jobs") = 1);

  m.def(
      "fam_bound",
      [](const std::string& group, const std::string& word, long long budget,
         int jobs) {
        const FiniteGroup G = catalog_group(group);
        return to_py(fam_bound_payload(
            fam_bound_check(G, parse_word(word), make_opts(budget, jobs))));
      },
      py::arg("group"), py::arg("word"), py::arg("budget") = 0,
      py::arg("jobs") = 1);

  m.def(
      "check_power_closed",
      [](const std::string& group, const std::vector<std::string>& classes) {
        const FiniteGroup G = catalog_group(group);
        const ClassTable T = conjugacy_classes(G);
        std::vector<int> members;
        std::string selection;
        for (const std::string& name : classes) {
          const int c = T.find(name);
          if (c < 0) throw ValidationError("no class named " + name);
          members.insert(members.end(), T.classes[c].begin(), T.classes[c].end());
          if (!selection.empty()) selection += ",";
          selection += name;
        }
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
        return to_py(
            power_closed_payload(G, selection, members, power_closed(G, members)));
      },
      py::arg("group"), py::arg("classes"));

  m.def("normalize_exponent", &normalize_exponent, py::arg("e"),
        py::arg("order_g"), py::arg("order_G"));

  m.def("gamma_word",
        [](const std::vector<long long>& exponents) {
          return gamma_power_word(exponents).render();
        },
        py::arg("exponents"), "text of the nested power-commutator word");
}
