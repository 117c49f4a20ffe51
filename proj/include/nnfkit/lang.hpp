/// @file  lang.hpp
/// @brief Language tags, query/transformation tags, and the static
///        capability matrices saying which language supports which
///        operation in polytime.

#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "types.hpp"

namespace nnfkit {

enum class Lang : unsigned {
  NNF,
  DNNF,
  D_NNF,
  S_NNF,
  F_NNF,
  D_DNNF,
  SD_DNNF,
  BDD,
  FBDD,
  OBDD,
  OBDD_LT,  // with respect to a fixed order
  DNF,
  CNF,
  PI,
  IP,
  MODS,
};
inline constexpr std::size_t kLangCount = 16;

inline constexpr std::array<Lang, kLangCount> all_langs = {
    Lang::NNF,  Lang::DNNF,    Lang::D_NNF, Lang::S_NNF, Lang::F_NNF,
    Lang::D_DNNF, Lang::SD_DNNF, Lang::BDD,   Lang::FBDD,  Lang::OBDD,
    Lang::OBDD_LT, Lang::DNF,    Lang::CNF,   Lang::PI,    Lang::IP,
    Lang::MODS,
};

inline std::string_view to_string(Lang l) {
  switch (l) {
    case Lang::NNF: return "NNF";
    case Lang::DNNF: return "DNNF";
    case Lang::D_NNF: return "d-NNF";
    case Lang::S_NNF: return "s-NNF";
    case Lang::F_NNF: return "f-NNF";
    case Lang::D_DNNF: return "d-DNNF";
    case Lang::SD_DNNF: return "sd-DNNF";
    case Lang::BDD: return "BDD";
    case Lang::FBDD: return "FBDD";
    case Lang::OBDD: return "OBDD";
    case Lang::OBDD_LT: return "OBDD_<";
    case Lang::DNF: return "DNF";
    case Lang::CNF: return "CNF";
    case Lang::PI: return "PI";
    case Lang::IP: return "IP";
    case Lang::MODS: return "MODS";
  }
  return "?";
}

inline std::optional<Lang> parse_lang(std::string_view s) {
  for (Lang l : all_langs)
    if (to_string(l) == s) return l;
  // forgiving CLI spellings
  if (s == "obdd_lt" || s == "obdd<" || s == "OBDD_LT" || s == "obdd_<")
    return Lang::OBDD_LT;
  std::string lower(s);
  for (char& c : lower) c = static_cast<char>(std::tolower(c));
  for (Lang l : all_langs) {
    std::string t(to_string(l));
    for (char& c : t) c = static_cast<char>(std::tolower(c));
    if (t == lower) return l;
  }
  return std::nullopt;
}

enum class Query : unsigned { CO, VA, CE, IM, EQ, SE, CT, ME };
inline constexpr std::size_t kQueryCount = 8;
inline constexpr std::array<Query, kQueryCount> all_queries = {
    Query::CO, Query::VA, Query::CE, Query::IM,
    Query::EQ, Query::SE, Query::CT, Query::ME};

inline std::string_view to_string(Query q) {
  switch (q) {
    case Query::CO: return "CO";
    case Query::VA: return "VA";
    case Query::CE: return "CE";
    case Query::IM: return "IM";
    case Query::EQ: return "EQ";
    case Query::SE: return "SE";
    case Query::CT: return "CT";
    case Query::ME: return "ME";
  }
  return "?";
}

enum class Transform : unsigned { CD, FO, SFO, AndC, AndBC, OrC, OrBC, NotC };
inline constexpr std::size_t kTransformCount = 8;
inline constexpr std::array<Transform, kTransformCount> all_transforms = {
    Transform::CD,    Transform::FO,  Transform::SFO, Transform::AndC,
    Transform::AndBC, Transform::OrC, Transform::OrBC, Transform::NotC};

inline std::string_view to_string(Transform t) {
  switch (t) {
    case Transform::CD: return "CD";
    case Transform::FO: return "FO";
    case Transform::SFO: return "SFO";
    case Transform::AndC: return "AND-C";
    case Transform::AndBC: return "AND-BC";
    case Transform::OrC: return "OR-C";
    case Transform::OrBC: return "OR-BC";
    case Transform::NotC: return "NOT-C";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Capability matrices. 1 = polytime support; 0 = refused (no polytime
// algorithm exists, is known, or is possible unless P=NP). Open cells are
// refused and documented: EQ for d-DNNF/sd-DNNF/FBDD, NOT-C for
// d-DNNF/sd-DNNF.

// clang-format off
//                                               CO VA CE IM EQ SE CT ME
inline constexpr bool kQueryMatrix[kLangCount][kQueryCount] = {
    /* NNF     */                               { 0, 0, 0, 0, 0, 0, 0, 0 },
    /* DNNF    */                               { 1, 0, 1, 0, 0, 0, 0, 1 },
    /* d-NNF   */                               { 0, 0, 0, 0, 0, 0, 0, 0 },
    /* s-NNF   */                               { 0, 0, 0, 0, 0, 0, 0, 0 },
    /* f-NNF   */                               { 0, 0, 0, 0, 0, 0, 0, 0 },
    /* d-DNNF  */                               { 1, 1, 1, 1, 0, 0, 1, 1 },
    /* sd-DNNF */                               { 1, 1, 1, 1, 0, 0, 1, 1 },
    /* BDD     */                               { 0, 0, 0, 0, 0, 0, 0, 0 },
    /* FBDD    */                               { 1, 1, 1, 1, 0, 0, 1, 1 },
    /* OBDD    */                               { 1, 1, 1, 1, 1, 0, 1, 1 },
    /* OBDD_<  */                               { 1, 1, 1, 1, 1, 1, 1, 1 },
    /* DNF     */                               { 1, 0, 1, 0, 0, 0, 0, 1 },
    /* CNF     */                               { 0, 1, 0, 1, 0, 0, 0, 0 },
    /* PI      */                               { 1, 1, 1, 1, 1, 1, 0, 1 },
    /* IP      */                               { 1, 1, 1, 1, 1, 1, 0, 1 },
    /* MODS    */                               { 1, 1, 1, 1, 1, 1, 1, 1 },
};

//                                               CD FO SFO ∧C ∧BC ∨C ∨BC ¬C
inline constexpr bool kTransformMatrix[kLangCount][kTransformCount] = {
    /* NNF     */                               { 1, 0, 1, 1, 1, 1, 1, 1 },
    /* DNNF    */                               { 1, 1, 1, 0, 0, 1, 1, 0 },
    /* d-NNF   */                               { 1, 0, 1, 1, 1, 1, 1, 1 },
    /* s-NNF   */                               { 1, 0, 1, 1, 1, 1, 1, 1 },
    /* f-NNF   */                               { 1, 0, 1, 0, 0, 0, 0, 1 },
    /* d-DNNF  */                               { 1, 0, 0, 0, 0, 0, 0, 0 },
    /* sd-DNNF */                               { 1, 0, 0, 0, 0, 0, 0, 0 },
    /* BDD     */                               { 1, 0, 1, 1, 1, 1, 1, 1 },
    /* FBDD    */                               { 1, 0, 0, 0, 0, 0, 0, 1 },
    /* OBDD    */                               { 1, 0, 1, 0, 0, 0, 0, 1 },
    /* OBDD_<  */                               { 1, 0, 1, 0, 1, 0, 1, 1 },
    /* DNF     */                               { 1, 1, 1, 0, 1, 1, 1, 0 },
    /* CNF     */                               { 1, 0, 1, 1, 1, 0, 1, 0 },
    /* PI      */                               { 1, 1, 1, 0, 0, 0, 1, 0 },
    /* IP      */                               { 1, 0, 0, 0, 1, 0, 0, 0 },
    /* MODS    */                               { 1, 1, 1, 0, 1, 0, 0, 0 },
};
// clang-format on

inline bool query_supported(Lang l, Query q) {
  return kQueryMatrix[static_cast<unsigned>(l)][static_cast<unsigned>(q)];
}
inline bool transform_supported(Lang l, Transform t) {
  return kTransformMatrix[static_cast<unsigned>(l)][static_cast<unsigned>(t)];
}

inline void require_query(Lang l, Query q) {
  if (!query_supported(l, q))
    throw CapabilityError("query " + std::string(to_string(q)) +
                          " is not supported in polytime for language " +
                          std::string(to_string(l)) +
                          " (capability matrix cell " + std::string(to_string(l)) +
                          "/" + std::string(to_string(q)) + ")");
}
inline void require_transform(Lang l, Transform t) {
  if (!transform_supported(l, t))
    throw CapabilityError("transformation " + std::string(to_string(t)) +
                          " is not supported in polytime for language " +
                          std::string(to_string(l)) +
                          " (capability matrix cell " + std::string(to_string(l)) +
                          "/" + std::string(to_string(t)) + ")");
}

}  // namespace nnfkit
