#include "wordlab/reports.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace wordlab {

namespace {

ojson class_meta(const FiniteGroup& G, const ClassTable& T) {
  ojson arr = ojson::array();
  for (int c = 0; c < T.num_classes(); ++c) {
    ojson row;
    row["name"] = T.names[c];
    row["size"] = T.sizes[c];
    row["element_order"] = G.element_order(T.rep[c]);
    row["rep"] = G.element(T.rep[c]).cycles();
    arr.push_back(std::move(row));
  }
  return arr;
}

ojson witness_json(const Witness& w) {
  ojson j;
  j["g"] = w.g;
  j["e"] = w.e;
  if (w.count_g) j["count_g"] = *w.count_g;
  if (w.count_ge) j["count_ge"] = *w.count_ge;
  return j;
}

}  // namespace

ojson group_info_payload(const FiniteGroup& G, const ClassTable& T) {
  ojson j;
  j["group"] = G.name();
  j["order"] = G.order();
  j["degree"] = G.degree();
  j["exponent"] = G.exponent();
  j["abelian"] = G.is_abelian();
  ojson gens = ojson::array();
  for (int g : G.generators()) gens.push_back(G.element(g).cycles());
  j["generators"] = std::move(gens);
  j["num_classes"] = T.num_classes();
  j["classes"] = class_meta(G, T);
  return j;
}

ojson group_list_payload(std::size_t order_cap) {
  ojson rows = ojson::array();
  for (const std::string& name : catalog_roster()) {
    const FiniteGroup G = catalog_group(name, order_cap);
    const ClassTable T = conjugacy_classes(G);
    ojson row;
    row["name"] = name;
    row["order"] = G.order();
    row["degree"] = G.degree();
    row["exponent"] = G.exponent();
    row["abelian"] = G.is_abelian();
    row["classes"] = T.num_classes();
    rows.push_back(std::move(row));
  }
  ojson j;
  j["catalog"] = std::move(rows);
  return j;
}

ojson word_eval_payload(const FiniteGroup& G, const Word& w, const Assignment& a,
                        int value) {
  ojson j;
  j["group"] = G.name();
  j["word"] = w.render();
  ojson bind;
  for (const auto& [name, idx] : a) bind[name] = G.element(idx).cycles();
  j["assignment"] = std::move(bind);
  ojson val;
  val["index"] = value;
  val["cycles"] = G.element(value).cycles();
  val["order"] = G.element_order(value);
  j["value"] = std::move(val);
  return j;
}

ojson word_image_payload(const FiniteGroup& G, const ClassTable& T, const Word& w,
                         const ElementSet& image) {
  ojson j;
  j["group"] = G.name();
  j["word"] = w.render();
  j["m"] = image.size();
  ojson rows = ojson::array();
  for (int g : image.members) {
    ojson row;
    row["index"] = g;
    row["cycles"] = G.element(g).cycles();
    row["class"] = T.names[T.class_of[g]];
    rows.push_back(std::move(row));
  }
  j["elements"] = std::move(rows);
  return j;
}

ojson verbal_payload(const FiniteGroup& G, const Word& w, const ElementSet& image,
                     const Subgroup& W) {
  bool normal = true;
  for (int x : W.members) {
    for (int g = 0; g < G.order() && normal; ++g)
      if (!W.contains(G.conjugate(x, g))) normal = false;
    if (!normal) break;
  }
  ojson j;
  j["group"] = G.name();
  j["word"] = w.render();
  j["image_size"] = image.size();
  j["order"] = W.order();
  j["normal"] = normal;
  ojson elems = ojson::array();
  for (int g : W.members) elems.push_back(G.element(g).cycles());
  j["elements"] = std::move(elems);
  return j;
}

ojson rationality_payload(const RationalityVerdict& v) {
  ojson j;
  j["mode"] = v.mode;
  j["group"] = v.group;
  j["word"] = v.word;
  j["m"] = v.m;
  j["holds"] = v.holds;
  if (v.witness) j["witness"] = witness_json(*v.witness);
  if (v.element_order_variant_holds)
    j["element_order_variant_holds"] = *v.element_order_variant_holds;
  return j;
}

ojson chartab_modp_payload(const FiniteGroup& G, const ClassTable& T,
                           const ModPCharacterTable& t) {
  ojson j;
  j["group"] = G.name();
  j["p"] = t.p;
  j["primitive_root"] = t.primitive_root;
  j["zeta"] = t.zeta;
  j["exponent"] = t.exponent;
  j["classes"] = class_meta(G, T);
  j["degrees"] = t.degrees;
  ojson rows = ojson::array();
  for (int c = 0; c < t.num_characters(); ++c) {
    ojson row;
    row["degree"] = t.degrees[c];
    row["values"] = t.values[c];
    rows.push_back(std::move(row));
  }
  j["characters"] = std::move(rows);
  return j;
}

ojson chartab_lift_payload(const FiniteGroup& G, const ClassTable& T,
                           const ComplexCharacterTable& t) {
  ojson j;
  j["group"] = G.name();
  j["exponent"] = t.exponent;
  j["root_convention"] = "exp(2*pi*i/" + std::to_string(t.exponent) + ")";
  j["classes"] = class_meta(G, T);
  j["degrees"] = t.degrees;
  ojson rows = ojson::array();
  for (int c = 0; c < t.num_characters(); ++c) {
    ojson row;
    row["degree"] = t.degrees[c];
    ojson vals = ojson::array();
    for (const auto& z : t.values[c]) {
      ojson v;
      v["re"] = z.real();
      v["im"] = z.imag();
      vals.push_back(std::move(v));
    }
    row["values"] = std::move(vals);
    rows.push_back(std::move(row));
  }
  j["characters"] = std::move(rows);
  return j;
}

ojson triple_payload(const std::string& group, const TripleCountReport& r) {
  ojson j;
  j["group"] = group;
  j["D"] = r.D;
  j["C"] = r.C;
  j["e"] = r.e;
  j["D_e"] = r.D_e;
  j["C_e"] = r.C_e;
  j["N_brute"] = r.N_brute;
  j["N_brute_e"] = r.N_brute_e;
  j["N_formula"] = r.N_formula;
  j["N_formula_e"] = r.N_formula_e;
  j["brute_equal"] = r.brute_equal;
  j["formula_matches"] = r.formula_matches;
  j["formula_matches_e"] = r.formula_matches_e;
  j["holds"] = r.holds;
  return j;
}

ojson corollary_payload(const CorollaryReport& r) {
  ojson j;
  j["exponents"] = r.exponents;
  j["word"] = r.word;
  ojson rows = ojson::array();
  ojson failures = ojson::array();
  ojson skips = ojson::array();
  for (const auto& gv : r.per_group) {
    ojson row;
    row["group"] = gv.group;
    row["status"] = gv.skipped ? "skipped" : "checked";
    row["holds"] = gv.skipped ? ojson() : ojson(gv.verdict.holds);
    row["m"] = gv.skipped ? ojson() : ojson(gv.verdict.m);
    rows.push_back(std::move(row));
    if (gv.skipped) {
      ojson s;
      s["group"] = gv.group;
      s["reason"] = gv.skip_reason;
      skips.push_back(std::move(s));
    } else if (!gv.verdict.holds) {
      failures.push_back(rationality_payload(gv.verdict));
    }
  }
  j["groups"] = std::move(rows);
  j["checked"] = r.checked;
  j["skipped"] = r.skipped;
  j["aggregate"] = r.aggregate;
  j["failures"] = std::move(failures);
  j["skip_reasons"] = std::move(skips);
  return j;
}

ojson concise_payload(const ConciseReport& r) {
  ojson j;
  j["group"] = r.group;
  j["word"] = r.word;
  j["m"] = r.m;
  j["W_order"] = r.W_order;
  j["W_derived_order"] = r.W_derived_order;
  j["W_abelian"] = r.W_abelian;
  j["centralizer_index"] = r.centralizer_index;
  j["m_factorial"] = r.m_factorial;
  j["kernel_equals_centralizer"] = r.kernel_equals_centralizer;
  j["L_m"] = r.L_m;
  j["L_m_pow_m"] = r.L_m_pow_m;
  ojson vo = ojson::array();
  for (const auto& [ord, phi] : r.value_orders) {
    ojson row;
    row["element_order"] = ord;
    row["phi"] = phi;
    vo.push_back(std::move(row));
  }
  j["value_orders"] = std::move(vo);
  ojson checks = ojson::array();
  for (const auto& c : r.checks) {
    ojson row;
    row["label"] = c.label;
    row["detail"] = c.detail;
    row["status"] = c.status;
    checks.push_back(std::move(row));
  }
  j["checks"] = std::move(checks);
  j["all_pass"] = r.all_pass;
  return j;
}

ojson fam_bound_payload(const FamBoundReport& r) {
  ojson j;
  j["group"] = r.group;
  j["word"] = r.word;
  j["m"] = r.m;
  j["W_order"] = r.W_order;
  j["bound"] = r.bound;
  j["holds"] = r.holds;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

ojson power_closed_payload(const FiniteGroup& G, const std::string& selection,
                           const std::vector<int>& members,
                           const PowerClosedReport& r) {
  ojson j;
  j["group"] = G.name();
  j["selection"] = selection;
  j["size"] = members.size();
  j["power_closed"] = r.power_closed;
  if (r.witness) {
    ojson w = witness_json(*r.witness);
    w["g_cycles"] = G.element(r.witness->g).cycles();
    j["witness"] = std::move(w);
  }
  j["conjugation_closed"] = r.conjugation_closed;
  j["contains_identity"] = r.contains_identity;
  return j;
}

namespace {

std::string scalar_text(const ojson& v) {
  if (v.is_null()) return "-";
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_float()) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v.get<double>());
    return buf;
  }
  return v.dump();
}

std::string cell_text(const ojson& v) {
  if (v.is_object()) {
    if (v.size() == 2 && v.contains("re") && v.contains("im")) {
      // avoid "-0.0000" when the value rounds to zero at display precision
      auto dz = [](double x) { return std::round(x * 1e4) == 0.0 ? 0.0 : x; };
      char buf[96];
      std::snprintf(buf, sizeof buf, "%.4f%+.4fi", dz(v["re"].get<double>()),
                    dz(v["im"].get<double>()));
      return buf;
    }
    return v.dump();
  }
  if (v.is_array()) {
    std::string out;
    for (const auto& e : v) {
      if (!out.empty()) out += " ";
      out += cell_text(e);
    }
    return out;
  }
  return scalar_text(v);
}

void render_record_table(const std::string& key, const ojson& rows,
                         std::ostringstream& out) {
  std::vector<std::string> cols;
  for (const auto& [k, v] : rows[0].items()) cols.push_back(k);
  std::vector<std::size_t> width(cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) width[c] = cols[c].size();
  std::vector<std::vector<std::string>> cells;
  for (const auto& row : rows) {
    std::vector<std::string> line;
    for (std::size_t c = 0; c < cols.size(); ++c) {
      line.push_back(row.contains(cols[c]) ? cell_text(row[cols[c]]) : "-");
      width[c] = std::max(width[c], line.back().size());
    }
    cells.push_back(std::move(line));
  }
  out << "\n" << key << ":\n";
  auto emit = [&](const std::vector<std::string>& line) {
    out << " ";
    for (std::size_t c = 0; c < cols.size(); ++c) {
      out << " " << line[c];
      if (c + 1 < cols.size())
        out << std::string(width[c] - line[c].size(), ' ');
    }
    out << "\n";
  };
  emit(cols);
  for (const auto& line : cells) emit(line);
}

}  // namespace

std::string render_table(const ojson& payload) {
  std::ostringstream out;
  for (const auto& [key, v] : payload.items()) {
    if (v.is_object()) {
      for (const auto& [k2, v2] : v.items())
        out << key << "." << k2 << ": " << cell_text(v2) << "\n";
    } else if (v.is_array()) {
      if (v.empty()) {
        out << key << ": (none)\n";
      } else if (v[0].is_object()) {
        render_record_table(key, v, out);
      } else {
        out << key << ": " << cell_text(v) << "\n";
      }
    } else {
      out << key << ": " << scalar_text(v) << "\n";
    }
  }
  return out.str();
}

}  // namespace wordlab
