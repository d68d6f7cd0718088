#include "rootgrid/io.hpp"

#include <fstream>
#include <sstream>
#include <utility>

namespace rootgrid::io {
namespace {

template <class F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Json::exception& err) {
    throw FormatError(std::string(what) + ": " + err.what());
  } catch (const std::invalid_argument& err) {
    throw FormatError(std::string(what) + ": " + err.what());
  } catch (const std::out_of_range& err) {
    throw FormatError(std::string(what) + ": " + err.what());
  }
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

template <class Set>
Json id_list(const Set& s) {
  Json out = Json::array();
  for (auto v : s) out.push_back(v);
  return out;
}

template <class T>
std::set<T> id_set(const Json& j) {
  if (!j.is_array()) throw FormatError("expected an id list");
  std::set<T> out;
  for (const Json& v : j) {
    if (!out.insert(v.get<T>()).second) throw FormatError("duplicate id " + v.dump());
  }
  return out;
}

Json coord_list(const CoordSet& s) {
  Json out = Json::array();
  for (GridCoord c : s) out.push_back(to_json(c));
  return out;
}

CoordSet coords_from(const Json& j) {
  CoordSet out;
  for (const Json& c : j) out.insert(coord_from_json(c));
  return out;
}

}  // namespace

Json to_json(const Graph& g) {
  Json edges = Json::array();
  for (const auto& [e, ends] : g.edges()) edges.push_back({e, ends.u, ends.v});
  return {{"vertices", id_list(g.vertices())}, {"edges", edges}};
}

Graph graph_from_json(const Json& j) {
  return guarded("graph", [&] {
    Graph g;
    for (VertexId v : id_set<VertexId>(field(j, "vertices"))) g.add_vertex(v);
    for (const Json& e : field(j, "edges")) {
      if (!e.is_array() || e.size() != 3) throw FormatError("edge entries are [id, u, v]");
      g.add_edge(e[0].get<EdgeId>(), e[1].get<VertexId>(), e[2].get<VertexId>());
    }
    return g;
  });
}

Json to_json(const Subgraph& s) { return {{"vertices", id_list(s.vertices)}, {"edges", id_list(s.edges)}}; }

Subgraph subgraph_from_json(const Json& j) {
  return guarded("subgraph", [&] {
    return Subgraph{id_set<VertexId>(field(j, "vertices")), id_set<EdgeId>(field(j, "edges"))};
  });
}

Json to_json(GridCoord c) { return Json::array({c.i, c.j}); }

GridCoord coord_from_json(const Json& j) {
  return guarded("coordinate", [&] {
    if (!j.is_array() || j.size() != 2) throw FormatError("coordinates are [i, j]");
    return GridCoord{j[0].get<int>(), j[1].get<int>()};
  });
}

Json to_json(const Pseudomodel& p) {
  Json pattern_edges = Json::array();
  for (const GridEdge& e : p.pattern.edges) pattern_edges.push_back({to_json(e.a), to_json(e.b)});
  Json branches = Json::array();
  for (const auto& [c, b] : p.branches) {
    branches.push_back({{"coord", to_json(c)}, {"vertices", id_list(b.vertices)}, {"edges", id_list(b.edges)}});
  }
  Json images = Json::array();
  for (const auto& [e, id] : p.edge_images) {
    images.push_back({{"from", to_json(e.a)}, {"to", to_json(e.b)}, {"image", id}});
  }
  return {{"pattern", {{"n", p.pattern.n}, {"coords", coord_list(p.pattern.vertices)}, {"edges", pattern_edges}}},
          {"branches", branches},
          {"edgeImages", images}};
}

Pseudomodel model_from_json(const Json& j) {
  return guarded("model", [&] {
    Pseudomodel p;
    const Json& pattern = field(j, "pattern");
    p.pattern.n = field(pattern, "n").get<int>();
    p.pattern.vertices = coords_from(field(pattern, "coords"));
    for (const Json& e : field(pattern, "edges")) {
      if (!e.is_array() || e.size() != 2) throw FormatError("pattern edges are [[i,j],[i,j]]");
      p.pattern.edges.insert(GridEdge(coord_from_json(e[0]), coord_from_json(e[1])));
    }
    for (const Json& b : field(j, "branches")) {
      const GridCoord c = coord_from_json(field(b, "coord"));
      if (!p.branches.emplace(c, subgraph_from_json(b)).second) {
        throw FormatError("two branches for " + to_string(c));
      }
    }
    for (const Json& e : field(j, "edgeImages")) {
      const GridEdge pe(coord_from_json(field(e, "from")), coord_from_json(field(e, "to")));
      if (!p.edge_images.emplace(pe, field(e, "image").get<EdgeId>()).second) {
        throw FormatError("two images for " + to_string(pe));
      }
    }
    return p;
  });
}

Json to_json(const Separation& s) { return {{"A", to_json(s.a())}, {"B", to_json(s.b())}, {"order", s.order()}}; }

Separation separation_from_json(const Json& j) {
  return guarded("separation", [&] {
    return Separation::trusted(subgraph_from_json(field(j, "A")), subgraph_from_json(field(j, "B")));
  });
}

Json to_json(const Path& p) { return {{"vertices", p.vertices}, {"edges", p.edges}}; }

Path path_from_json(const Json& j) {
  return guarded("path", [&] {
    return Path{field(j, "vertices").get<std::vector<VertexId>>(), field(j, "edges").get<std::vector<EdgeId>>()};
  });
}

Json roots_to_json(const VertexSet& roots) { return {{"roots", id_list(roots)}}; }

VertexSet roots_from_json(const Json& j) {
  return guarded("roots", [&] { return id_set<VertexId>(field(j, "roots")); });
}

Json to_json(const GridAtlas& a) {
  return {{"n", a.spec.n}, {"anchor", to_json(a.anchor)}, {"g", a.g}, {"k", a.k}};
}

GridAtlas atlas_from_json(const Json& j) {
  return guarded("atlas", [&] {
    return GridAtlas(GridSpec{field(j, "n").get<int>()}, coord_from_json(field(j, "anchor")),
                     field(j, "g").get<int>(), field(j, "k").get<int>());
  });
}

Json to_json(const BlockingSeparation& b) {
  return {{"kind", b.kind == BlockingSeparation::Kind::strict ? "strict" : "reducible"},
          {"row", b.row},
          {"separation", to_json(b.separation)}};
}

BlockingSeparation blocking_from_json(const Json& j) {
  return guarded("blocking separation", [&] {
    const std::string kind = field(j, "kind").get<std::string>();
    if (kind != "strict" && kind != "reducible") throw FormatError("unknown blocking kind " + kind);
    return BlockingSeparation{kind == "strict" ? BlockingSeparation::Kind::strict
                                               : BlockingSeparation::Kind::reducible,
                              separation_from_json(field(j, "separation")), field(j, "row").get<int>()};
  });
}

Json to_json(const ReductionRecord& r) {
  Json j = {{"kind", kind_name(r.step)}, {"measureBefore", r.measure_before}, {"measureAfter", r.measure_after}};
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, SeparationRecursion>) {
          j["separation"] = to_json(s.separation);
          j["row"] = s.row;
        } else if constexpr (std::is_same_v<T, EdgeDeletion>) {
          j["edge"] = s.edge;
        } else if constexpr (std::is_same_v<T, BranchEdgeDeletion>) {
          j["edge"] = s.edge;
          j["owner"] = to_json(s.owner);
        } else if constexpr (std::is_same_v<T, BranchEdgeContraction>) {
          j["edge"] = s.edge;
          j["owner"] = to_json(s.owner);
          j["absorbed"] = s.rename.absorbed;
          j["survivor"] = s.rename.survivor;
        } else if constexpr (std::is_same_v<T, BandSelection>) {
          j["atlas"] = to_json(s.atlas);
          j["forbidden"] = coord_list(s.forbidden);
        } else {
          Json paths = Json::array();
          for (const Path& p : s.paths) paths.push_back(to_json(p));
          j["paths"] = paths;
        }
      },
      r.step);
  return j;
}

ReductionRecord record_from_json(const Json& j) {
  return guarded("trace record", [&] {
    ReductionRecord r;
    r.measure_before = field(j, "measureBefore").get<std::size_t>();
    r.measure_after = field(j, "measureAfter").get<std::size_t>();
    const std::string kind = field(j, "kind").get<std::string>();
    if (kind == "separation-recursion") {
      r.step = SeparationRecursion{separation_from_json(field(j, "separation")), field(j, "row").get<int>()};
    } else if (kind == "edge-delete") {
      r.step = EdgeDeletion{field(j, "edge").get<EdgeId>()};
    } else if (kind == "branch-edge-delete") {
      r.step = BranchEdgeDeletion{field(j, "edge").get<EdgeId>(), coord_from_json(field(j, "owner"))};
    } else if (kind == "branch-edge-contract") {
      r.step = BranchEdgeContraction{
          field(j, "edge").get<EdgeId>(), coord_from_json(field(j, "owner")),
          VertexRename{field(j, "absorbed").get<VertexId>(), field(j, "survivor").get<VertexId>()}};
    } else if (kind == "band-selected") {
      r.step = BandSelection{atlas_from_json(field(j, "atlas")), coords_from(field(j, "forbidden"))};
    } else if (kind == "menger-augment") {
      MengerAugmentation m;
      for (const Json& p : field(j, "paths")) m.paths.push_back(path_from_json(p));
      r.step = std::move(m);
    } else {
      throw FormatError("unknown trace record kind " + kind);
    }
    return r;
  });
}

Json to_json(const ValidationReport& r) {
  Json list = Json::array();
  for (const Violation& v : r.violations) list.push_back({{"rule", v.rule}, {"subject", v.subject}, {"detail", v.detail}});
  return {{"ok", r.ok()}, {"violations", list}};
}

Json to_json(const ExtractionParams& p) { return {{"n", p.n}, {"g", p.g}, {"k", p.k}}; }

ExtractionParams params_from_json(const Json& j) {
  return guarded("params", [&] {
    return ExtractionParams{field(j, "n").get<int>(), field(j, "g").get<int>(), field(j, "k").get<int>()};
  });
}

Json result_to_json(const ExtractionParams& params, const ExtractionResult& r) {
  Json labeling = Json::array();
  for (const auto& [small, big] : r.witness.labeling) labeling.push_back({{"grid", to_json(small)}, {"pattern", to_json(big)}});
  Json trace = Json::array();
  for (const ReductionRecord& rec : r.trace) trace.push_back(to_json(rec));
  return {{"params", to_json(params)},
          {"roots", id_list(r.witness.roots)},
          {"atlas", to_json(r.atlas)},
          {"subgrid", {{"anchor", to_json(r.atlas.anchor)}, {"side", r.atlas.g}, {"coords", coord_list(r.subgrid)}}},
          {"labeling", labeling},
          {"base", to_json(r.witness.base)},
          {"augmented", to_json(r.witness.augmented)},
          {"trace", trace}};
}

ExtractionResult result_from_json(const Json& j) {
  return guarded("result bundle", [&] {
    ExtractionResult r;
    r.atlas = atlas_from_json(field(j, "atlas"));
    r.subgrid = coords_from(field(field(j, "subgrid"), "coords"));
    r.witness.roots = id_set<VertexId>(field(j, "roots"));
    for (const Json& l : field(j, "labeling")) {
      r.witness.labeling.emplace_back(coord_from_json(field(l, "grid")), coord_from_json(field(l, "pattern")));
    }
    r.witness.base = model_from_json(field(j, "base"));
    r.witness.augmented = model_from_json(field(j, "augmented"));
    for (const Json& rec : field(j, "trace")) r.trace.push_back(record_from_json(rec));
    return r;
  });
}

std::string trace_to_jsonl(const std::vector<ReductionRecord>& trace) {
  std::string out;
  for (const ReductionRecord& r : trace) out += to_json(r).dump() + "\n";
  return out;
}

std::vector<ReductionRecord> trace_from_jsonl(const std::string& text) {
  std::vector<ReductionRecord> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    out.push_back(record_from_json(guarded("trace line", [&] { return Json::parse(line); })));
  }
  return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

Json read_json(const std::filesystem::path& path) {
  const std::string text = read_text(path);
  return guarded(path.string().c_str(), [&] { return Json::parse(text); });
}

}  // namespace rootgrid::io
