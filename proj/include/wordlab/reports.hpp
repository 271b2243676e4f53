#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "wordlab/characters.hpp"
#include "wordlab/classes.hpp"
#include "wordlab/conciseness.hpp"
#include "wordlab/eval.hpp"
#include "wordlab/group.hpp"
#include "wordlab/rationality.hpp"
#include "wordlab/word.hpp"

namespace wordlab {

/// All emitted documents use insertion-ordered JSON so identical inputs
/// produce byte-identical output.
using ojson = nlohmann::ordered_json;

ojson group_info_payload(const FiniteGroup& G, const ClassTable& T);
ojson group_list_payload(std::size_t order_cap = FiniteGroup::kDefaultOrderCap);

ojson word_eval_payload(const FiniteGroup& G, const Word& w, const Assignment& a,
                        int value);
ojson word_image_payload(const FiniteGroup& G, const ClassTable& T, const Word& w,
                         const ElementSet& image);
ojson verbal_payload(const FiniteGroup& G, const Word& w, const ElementSet& image,
                     const Subgroup& W);

ojson rationality_payload(const RationalityVerdict& v);

ojson chartab_modp_payload(const FiniteGroup& G, const ClassTable& T,
                           const ModPCharacterTable& t);
ojson chartab_lift_payload(const FiniteGroup& G, const ClassTable& T,
                           const ComplexCharacterTable& t);

ojson triple_payload(const std::string& group, const TripleCountReport& r);
ojson corollary_payload(const CorollaryReport& r);
ojson concise_payload(const ConciseReport& r);
ojson fam_bound_payload(const FamBoundReport& r);
ojson power_closed_payload(const FiniteGroup& G, const std::string& selection,
                           const std::vector<int>& members,
                           const PowerClosedReport& r);

/// Aligned plain-text rendering of any payload above: scalars as key/value
/// lines, arrays of records as columned tables.
std::string render_table(const ojson& payload);

}  // namespace wordlab
