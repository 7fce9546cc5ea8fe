#include "fcnlab/verifiers.hpp"

#include "fcnlab/graph_io.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace fcnlab {

using json = nlohmann::json;

namespace {

std::size_t count_in(const Graph& g, Vertex v, const Bitset& d) {
  std::size_t c = 0;
  for (Vertex w : g.neighbors(v)) c += d.test(w);
  return c;
}

bool induced_connected(const Graph& g, const Bitset& d) {
  auto start = d.find_first();
  if (start == Bitset::npos) return false;
  Bitset seen(g.order());
  std::vector<Vertex> stack{static_cast<Vertex>(start)};
  seen.set(start);
  std::size_t reached = 1;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(u)) {
      if (d.test(w) && !seen.test(w)) {
        seen.set(w);
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == d.count();
}

void require_connected(const Graph& g, const DistanceMatrix& dist) {
  if (!dist.all_reachable()) {
    throw std::invalid_argument("resolving sets are undefined on the disconnected graph '" +
                                g.name() + "'");
  }
}

// Sorting the codes groups equal ones; returns the first clashing pair.
std::optional<std::pair<Vertex, Vertex>> first_code_clash(const Graph& g,
                                                          const DistanceMatrix& dist,
                                                          const Bitset& r) {
  const VertexList landmarks = to_list(r);
  std::vector<std::pair<CodeVector, Vertex>> rows;
  rows.reserve(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    CodeVector c;
    c.reserve(landmarks.size());
    for (Vertex m : landmarks) c.push_back(dist(v, m));
    rows.emplace_back(std::move(c), v);
  }
  std::sort(rows.begin(), rows.end());
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].first == rows[i - 1].first) {
      return std::make_pair(rows[i - 1].second, rows[i].second);
    }
  }
  return std::nullopt;
}

std::string code_string(const Graph& g, const DistanceMatrix& dist, const Bitset& r,
                        Vertex v) {
  std::string s = "(";
  bool first = true;
  for (Vertex m : to_list(r)) {
    if (!first) s += ",";
    s += std::to_string(dist(v, m));
    first = false;
  }
  (void)g;
  return s + ")";
}

}  // namespace

bool is_dominating(const Graph& g, std::span<const Vertex> dl) {
  const Bitset d = to_bitset(g, dl);
  if (d.none()) return g.order() == 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!d.test(v) && !g.neighbor_set(v).intersects(d)) return false;
  }
  return true;
}

bool is_independent(const Graph& g, std::span<const Vertex> dl) {
  const Bitset d = to_bitset(g, dl);
  for (auto v = d.find_first(); v != Bitset::npos; v = d.find_next(v)) {
    if (g.neighbor_set(static_cast<Vertex>(v)).intersects(d)) return false;
  }
  return true;
}

bool is_total_dominating(const Graph& g, std::span<const Vertex> dl) {
  const Bitset d = to_bitset(g, dl);
  if (d.none()) return g.order() == 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!g.neighbor_set(v).intersects(d)) return false;
  }
  return true;
}

bool is_connected_dominating(const Graph& g, std::span<const Vertex> dl) {
  if (g.order() == 0) return dl.empty();
  return is_dominating(g, dl) && induced_connected(g, to_bitset(g, dl));
}

bool is_double_dominating(const Graph& g, std::span<const Vertex> dl) {
  const Bitset d = to_bitset(g, dl);
  if (d.none()) return g.order() == 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (count_in(g, v, d) + d.test(v) < 2) return false;
  }
  return true;
}

bool is_2_dominating(const Graph& g, std::span<const Vertex> dl) {
  const Bitset d = to_bitset(g, dl);
  if (d.none()) return g.order() == 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!d.test(v) && count_in(g, v, d) < 2) return false;
  }
  return true;
}

bool is_resolving(const Graph& g, const DistanceMatrix& dist, std::span<const Vertex> rl) {
  require_connected(g, dist);
  const Bitset r = to_bitset(g, rl);
  return !first_code_clash(g, dist, r).has_value();
}

bool is_resolving(const Graph& g, std::span<const Vertex> r) {
  return is_resolving(g, all_pairs_distances(g), r);
}

bool is_quasi_double_dominating_pair(const Graph& g, std::span<const Vertex> ul,
                                     std::span<const Vertex> vl) {
  const Bitset u = to_bitset(g, ul);
  const Bitset v = to_bitset(g, vl);
  if (u.intersects(v)) return false;
  const Bitset s = u | v;
  const VertexList sl = to_list(s);
  if (!is_2_dominating(g, sl)) return false;
  for (Vertex w = 0; w < g.order(); ++w) {
    if (u.test(w)) continue;
    // In g - u the closed neighbourhood of w meets v exactly where N_g[w] does.
    if (count_in(g, w, v) + v.test(w) < 2) return false;
  }
  return true;
}

bool check(ParameterKind kind, const Graph& g, const DistanceMatrix& dist,
           std::span<const Vertex> d) {
  switch (kind) {
    case ParameterKind::DOM:
      return is_dominating(g, d);
    case ParameterKind::IDOM:
      return is_dominating(g, d) && is_independent(g, d);
    case ParameterKind::TDOM:
      return is_total_dominating(g, d);
    case ParameterKind::CDOM:
      return is_connected_dominating(g, d);
    case ParameterKind::DDOM:
      return is_double_dominating(g, d);
    case ParameterKind::TWODOM:
      return is_2_dominating(g, d);
    case ParameterKind::DIM:
      return is_resolving(g, dist, d);
    case ParameterKind::RDOM:
      return is_resolving(g, dist, d) && is_dominating(g, d);
    case ParameterKind::RIDOM:
      return is_resolving(g, dist, d) && is_dominating(g, d) && is_independent(g, d);
    case ParameterKind::RTDOM:
      return is_resolving(g, dist, d) && is_total_dominating(g, d);
    case ParameterKind::RCDOM:
      return is_resolving(g, dist, d) && is_connected_dominating(g, d);
    case ParameterKind::QDDOM:
      break;
  }
  throw std::invalid_argument(
      "QDDOM is a property of a (U, V) pair; use is_quasi_double_dominating_pair");
}

bool check(ParameterKind kind, const Graph& g, std::span<const Vertex> d) {
  if (needs_resolving(kind)) return check(kind, g, all_pairs_distances(g), d);
  return check(kind, g, DistanceMatrix{}, d);
}

std::optional<std::string> find_violation(ParameterKind kind, const Graph& g,
                                          std::span<const Vertex> dl) {
  if (kind == ParameterKind::QDDOM) {
    throw std::invalid_argument("QDDOM certificates are checked as a pair");
  }
  const Bitset d = to_bitset(g, dl);
  const std::size_t n = g.order();
  auto name = [&](Vertex v) { return "'" + g.label(v) + "'"; };

  if (d.none() && n > 0 && kind != ParameterKind::DIM) return "the set is empty";

  const bool dom = kind == ParameterKind::DOM || kind == ParameterKind::IDOM ||
                   kind == ParameterKind::CDOM || kind == ParameterKind::RDOM ||
                   kind == ParameterKind::RIDOM || kind == ParameterKind::RCDOM;
  const bool total = kind == ParameterKind::TDOM || kind == ParameterKind::RTDOM;

  if (dom) {
    for (Vertex v = 0; v < n; ++v) {
      if (!d.test(v) && !g.neighbor_set(v).intersects(d)) {
        return "vertex " + name(v) + " is not dominated";
      }
    }
  }
  if (total) {
    for (Vertex v = 0; v < n; ++v) {
      if (!g.neighbor_set(v).intersects(d)) {
        return "vertex " + name(v) + " has no neighbour in the set";
      }
    }
  }
  if (kind == ParameterKind::DDOM) {
    for (Vertex v = 0; v < n; ++v) {
      auto c = count_in(g, v, d) + d.test(v);
      if (c < 2) return "|N[" + g.label(v) + "] & D| = " + std::to_string(c) + " < 2";
    }
  }
  if (kind == ParameterKind::TWODOM) {
    for (Vertex v = 0; v < n; ++v) {
      if (d.test(v)) continue;
      auto c = count_in(g, v, d);
      if (c < 2) return "|N(" + g.label(v) + ") & D| = " + std::to_string(c) + " < 2";
    }
  }
  if (kind == ParameterKind::IDOM || kind == ParameterKind::RIDOM) {
    for (auto v = d.find_first(); v != Bitset::npos; v = d.find_next(v)) {
      const Bitset hit = g.neighbor_set(static_cast<Vertex>(v)) & d;
      if (hit.any()) {
        return "set members " + name(static_cast<Vertex>(v)) + " and " +
               name(static_cast<Vertex>(hit.find_first())) + " are adjacent";
      }
    }
  }
  if (needs_connected(kind) && !induced_connected(g, d)) {
    Graph sub = induced_subgraph(g, to_list(d));
    auto comps = connected_components(sub);
    return "the induced subgraph has " + std::to_string(comps.size()) +
           " components; '" + sub.label(comps[0].front()) + "' and '" +
           sub.label(comps[1].front()) + "' are not joined";
  }
  if (needs_resolving(kind)) {
    const DistanceMatrix dist = all_pairs_distances(g);
    require_connected(g, dist);
    if (auto clash = first_code_clash(g, dist, d)) {
      return "vertices " + name(clash->first) + " and " + name(clash->second) +
             " share the code " + code_string(g, dist, d, clash->first);
    }
  }
  return std::nullopt;
}

std::vector<CodeVector> codes(const Graph& g, std::span<const Vertex> r) {
  const DistanceMatrix dist = all_pairs_distances(g);
  require_connected(g, dist);
  for (Vertex m : r) {
    if (m >= g.order()) {
      throw GraphError("landmark " + std::to_string(m) + " is not a vertex");
    }
  }
  std::vector<CodeVector> out(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    out[v].reserve(r.size());
    for (Vertex m : r) out[v].push_back(dist(v, m));
  }
  return out;
}

Certificate make_certificate(ParameterKind kind, const Graph& g, VertexList vertices,
                             VertexList pair_u) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  std::sort(pair_u.begin(), pair_u.end());
  return Certificate{kind, std::move(vertices), graph_digest(g), std::move(pair_u)};
}

std::string certificate_to_json(const Certificate& cert, const Graph& g) {
  auto names = [&](const VertexList& vs) {
    json arr = json::array();
    for (Vertex v : vs) {
      if (g.has_labels()) {
        arr.push_back(g.label(v));
      } else {
        arr.push_back(v);
      }
    }
    return arr;
  };
  nlohmann::ordered_json doc;
  doc["kind"] = std::string(kind_name(cert.kind));
  doc["graph_digest"] = cert.graph_digest;
  doc["size"] = cert.vertices.size();
  doc["vertices"] = names(cert.vertices);
  if (cert.kind == ParameterKind::QDDOM) doc["u"] = names(cert.pair_u);
  return doc.dump(2) + "\n";
}

Certificate parse_certificate(std::string_view text, const Graph& g) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    auto [line, col] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError("invalid certificate JSON: " + std::string(e.what()), line, col);
  }
  if (!doc.is_object() || !doc.contains("kind") || !doc["kind"].is_string() ||
      !doc.contains("vertices") || !doc["vertices"].is_array()) {
    throw ParseError("certificate needs string \"kind\" and array \"vertices\"", 0, 0);
  }
  auto read = [&](const json& arr) {
    VertexList out;
    for (const auto& item : arr) {
      if (item.is_string()) {
        auto v = g.find(item.get<std::string>());
        if (!v) throw GraphError("unknown vertex '" + item.get<std::string>() + "'");
        out.push_back(*v);
      } else if (item.is_number_unsigned()) {
        auto v = item.get<Vertex>();
        if (v >= g.order()) throw GraphError("vertex " + std::to_string(v) + " out of range");
        out.push_back(v);
      } else {
        throw ParseError("certificate vertices must be labels or indices", 0, 0);
      }
    }
    return out;
  };
  Certificate cert;
  cert.kind = parse_kind(doc["kind"].get<std::string>());
  cert.vertices = read(doc["vertices"]);
  std::sort(cert.vertices.begin(), cert.vertices.end());
  if (doc.contains("graph_digest") && doc["graph_digest"].is_string()) {
    cert.graph_digest = doc["graph_digest"].get<std::string>();
  }
  if (doc.contains("u")) cert.pair_u = read(doc["u"]);
  return cert;
}

CertificateCheck verify_certificate(const Certificate& cert, const Graph& g) {
  const std::string digest = graph_digest(g);
  if (cert.graph_digest != digest) {
    return {false, "certificate digest " +
                       (cert.graph_digest.empty() ? std::string("<missing>")
                                                  : cert.graph_digest) +
                       " does not match graph digest " + digest};
  }
  if (cert.kind == ParameterKind::QDDOM) {
    const Bitset u = to_bitset(g, cert.pair_u);
    const Bitset all = to_bitset(g, cert.vertices);
    if (!u.is_subset_of(all)) return {false, "U is not a subset of the certificate"};
    const VertexList v = to_list(all - u);
    if (is_quasi_double_dominating_pair(g, cert.pair_u, v)) return {true, "ok"};
    return {false, "(U, V) is not a quasi-double dominating pair"};
  }
  if (auto why = find_violation(cert.kind, g, cert.vertices)) return {false, *why};
  return {true, "ok"};
}

}  // namespace fcnlab
