#include "fcnlab/constructions.hpp"

#include "fcnlab/generators.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

namespace fcnlab {

namespace {

constexpr std::size_t kMaxLevel = 7;

using LabelSet = std::set<std::string>;

std::string repeat(std::string_view block, std::size_t times) {
  std::string out;
  for (std::size_t i = 0; i < times; ++i) out += block;
  return out;
}

const std::vector<std::string> kPrefixes{"00", "01", "10", "11"};

/// {ab || x : a, b in {0,1}, x in d}
LabelSet prefix_all(const LabelSet& d) {
  LabelSet out;
  for (const auto& p : kPrefixes) {
    for (const auto& x : d) out.insert(p + x);
  }
  return out;
}

void erase_all(LabelSet& d, const std::vector<std::string>& gone) {
  for (const auto& x : gone) {
    if (d.erase(x) == 0) {
      throw std::logic_error("construction step removes '" + x + "', which is not in the set");
    }
  }
}

void insert_all(LabelSet& d, const std::vector<std::string>& extra) {
  for (const auto& x : extra) d.insert(x);
}

/// The four labels h + (01)^e + tail for h in {0010, 0110, 1010, 1110}.
std::vector<std::string> four_heads(std::size_t e, std::string_view tail) {
  std::vector<std::string> out;
  for (const char* h : {"0010", "0110", "1010", "1110"}) {
    out.push_back(h + repeat("01", e) + std::string(tail));
  }
  return out;
}

const std::vector<std::string> kDomBase{"1101", "1010", "1001", "0110", "0101", "0001"};
const std::vector<std::string> kTotalBase{"1111", "1110", "1011", "1010",
                                          "0111", "0110", "0011", "0010"};

std::vector<std::string> double_base() {
  std::vector<std::string> out;
  for (const auto& p : kPrefixes) {
    for (const char* s : {"01", "10", "11"}) out.push_back(p + s);
  }
  return out;
}

/// All labels of length 2*level + 2.
std::vector<std::string> all_labels(std::size_t level) {
  std::vector<std::string> out{""};
  for (std::size_t i = 0; i <= level; ++i) {
    std::vector<std::string> next;
    for (const auto& x : out) {
      for (const auto& p : kPrefixes) next.push_back(x + p);
    }
    out = std::move(next);
  }
  return out;
}

LabelSet neighbourhood_rule(std::size_t level, ConstructionVariant variant) {
  LabelSet out;
  if (variant == ConstructionVariant::TwinClosure) {
    for (const auto& x : all_labels(level - 1)) {
      out.insert(x + "00");
      out.insert(x + "11");
    }
    return out;
  }
  const Graph g = fcn(level);
  for (Vertex v = 0; v < g.order(); ++v) {
    const std::string& s = g.label(v);
    if (s.size() >= 2 && s.compare(s.size() - 2, 2, "01") == 0) {
      for (Vertex w : g.neighbors(v)) out.insert(g.label(w));
    }
  }
  return out;
}

LabelSet build(ParameterKind kind, std::size_t level, ConstructionVariant variant) {
  switch (kind) {
    case ParameterKind::DOM:
    case ParameterKind::IDOM: {
      LabelSet d(kDomBase.begin(), kDomBase.end());
      for (std::size_t l = 2; l <= level; ++l) {
        d = prefix_all(d);
        erase_all(d, {"1110" + repeat("01", l - 1), "0010" + repeat("01", l - 1)});
      }
      return d;
    }
    case ParameterKind::TDOM: {
      LabelSet d(kTotalBase.begin(), kTotalBase.end());
      for (std::size_t l = 2; l <= level; ++l) {
        d = prefix_all(d);
        insert_all(d, {"1010" + repeat("01", l - 1), "1110" + repeat("01", l - 1)});
        erase_all(d, four_heads(l - 2, "11"));
      }
      return d;
    }
    case ParameterKind::CDOM:
    case ParameterKind::RCDOM: {
      LabelSet d(kTotalBase.begin(), kTotalBase.end());
      for (std::size_t l = 2; l <= level; ++l) {
        d = prefix_all(d);
        insert_all(d, four_heads(l - 1, ""));
      }
      return d;
    }
    case ParameterKind::DDOM: {
      const auto base = double_base();
      LabelSet d(base.begin(), base.end());
      for (std::size_t l = 2; l <= level; ++l) {
        d = prefix_all(d);
        erase_all(d, four_heads(l - 2, "11"));
      }
      return d;
    }
    case ParameterKind::TWODOM:
    case ParameterKind::RDOM:
    case ParameterKind::RIDOM:
      return neighbourhood_rule(level, variant);
    case ParameterKind::RTDOM: {
      LabelSet d(kTotalBase.begin(), kTotalBase.end());
      for (std::size_t l = 2; l <= level; ++l) d = prefix_all(d);
      return d;
    }
    case ParameterKind::DIM:
    case ParameterKind::QDDOM:
      break;
  }
  throw std::invalid_argument("no construction for " + std::string(kind_name(kind)));
}

}  // namespace

std::string_view variant_name(ConstructionVariant v) {
  return v == ConstructionVariant::Literal ? "literal" : "twin-closure";
}

ConstructionVariant parse_variant(std::string_view name) {
  std::string s(name);
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (s == "literal") return ConstructionVariant::Literal;
  if (s == "twin-closure" || s == "twin_closure" || s == "twin") {
    return ConstructionVariant::TwinClosure;
  }
  throw std::invalid_argument("unknown construction variant '" + std::string(name) +
                              "' (expected literal or twin-closure)");
}

bool has_construction(ParameterKind kind) {
  return kind != ParameterKind::DIM && kind != ParameterKind::QDDOM;
}

ConstructionRule construction_rule(ParameterKind kind) {
  ConstructionRule r;
  r.kind = kind;
  r.anchor_level = 1;
  switch (kind) {
    case ParameterKind::DOM:
    case ParameterKind::IDOM:
      r.base = kDomBase;
      r.step = "ab||D minus {1110(01)^(l-1), 0010(01)^(l-1)}";
      break;
    case ParameterKind::TDOM:
      r.base = kTotalBase;
      r.step = "ab||D plus {1010(01)^(l-1), 1110(01)^(l-1)} minus {h(01)^(l-2)11 : h in 0010,0110,1010,1110}";
      break;
    case ParameterKind::CDOM:
    case ParameterKind::RCDOM:
      r.base = kTotalBase;
      r.step = "ab||D plus {h(01)^(l-1) : h in 0010,0110,1010,1110}";
      break;
    case ParameterKind::DDOM:
      r.base = double_base();
      r.step = "ab||D minus {h(01)^(l-2)11 : h in 0010,0110,1010,1110}";
      break;
    case ParameterKind::TWODOM:
    case ParameterKind::RDOM:
    case ParameterKind::RIDOM:
      r.step = "union of N(v) over labels v ending in 01 (twin-closure: all p00 and p11)";
      break;
    case ParameterKind::RTDOM:
      r.base = kTotalBase;
      r.step = "ab||D";
      break;
    case ParameterKind::DIM:
    case ParameterKind::QDDOM:
      throw std::invalid_argument("no construction for " + std::string(kind_name(kind)));
  }
  return r;
}

std::vector<std::string> construct_labels(ParameterKind kind, std::size_t level,
                                          ConstructionVariant variant) {
  if (!has_construction(kind)) {
    throw std::invalid_argument("no construction for " + std::string(kind_name(kind)));
  }
  if (level < 1 || level > kMaxLevel) {
    throw std::invalid_argument("construction for " + std::string(kind_name(kind)) +
                                " is defined for levels 1.." + std::to_string(kMaxLevel) +
                                ", got " + std::to_string(level));
  }
  const LabelSet d = build(kind, level, variant);
  return {d.begin(), d.end()};
}

Certificate construct(ParameterKind kind, std::size_t level, ConstructionVariant variant) {
  const auto labels = construct_labels(kind, level, variant);
  const Graph g = fcn(level);
  return make_certificate(kind, g, resolve_labels(g, labels));
}

std::optional<std::size_t> formula_value(ParameterKind kind, std::size_t level) {
  // Level-0 values are exhaustive on C4.
  std::size_t x = 0;
  switch (kind) {
    case ParameterKind::DOM:
    case ParameterKind::IDOM:
      x = 2;
      for (std::size_t l = 1; l <= level; ++l) x = 4 * x - 2;
      return x;
    case ParameterKind::TDOM:
      if (level == 0) return 2;
      x = 8;
      for (std::size_t l = 2; l <= level; ++l) x = 4 * x - 2;
      return x;
    case ParameterKind::CDOM:
      x = 2;
      for (std::size_t l = 1; l <= level; ++l) x = 4 * (x + 1);
      return x;
    case ParameterKind::DDOM:
      if (level == 0) return 3;
      x = 12;
      for (std::size_t l = 2; l <= level; ++l) x = 4 * (x - 1);
      return x;
    case ParameterKind::TWODOM:
      x = 2;
      for (std::size_t l = 1; l <= level; ++l) x *= 4;
      return x;
    case ParameterKind::RDOM:
      if (level == 0) return 2;
      return 4 * *formula_value(ParameterKind::TWODOM, level - 1);
    case ParameterKind::RIDOM:
      if (level == 0) return std::nullopt;
      return 4 * *formula_value(ParameterKind::TWODOM, level - 1);
    case ParameterKind::RTDOM:
      if (level == 0) return 2;
      x = 8;
      for (std::size_t l = 2; l <= level; ++l) x *= 4;
      return x;
    case ParameterKind::RCDOM:
      if (level == 0) return 2;
      return 4 * (*formula_value(ParameterKind::CDOM, level - 1) + 1);
    case ParameterKind::DIM:
      if (level == 0) return 2;
      x = 1;
      for (std::size_t l = 1; l <= level; ++l) x *= 4;
      return x;
    case ParameterKind::QDDOM:
      return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace fcnlab
