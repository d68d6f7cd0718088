#ifndef ROOTGRID_IO_HPP
#define ROOTGRID_IO_HPP

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "rootgrid/extraction.hpp"
#include "rootgrid/graph.hpp"
#include "rootgrid/model.hpp"
#include "rootgrid/report.hpp"
#include "rootgrid/separation.hpp"

namespace rootgrid::io {

using Json = nlohmann::json;

/// Unreadable file, bad JSON, or a document of the wrong shape.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Every writer emits keys in sorted order and sorted id lists, so equal
// values serialize to equal bytes.

[[nodiscard]] Json to_json(const Graph& g);
[[nodiscard]] Graph graph_from_json(const Json& j);

[[nodiscard]] Json to_json(const Subgraph& s);
[[nodiscard]] Subgraph subgraph_from_json(const Json& j);

[[nodiscard]] Json to_json(GridCoord c);
[[nodiscard]] GridCoord coord_from_json(const Json& j);

[[nodiscard]] Json to_json(const Pseudomodel& p);
[[nodiscard]] Pseudomodel model_from_json(const Json& j);

[[nodiscard]] Json to_json(const Separation& s);
[[nodiscard]] Separation separation_from_json(const Json& j);

[[nodiscard]] Json to_json(const Path& p);
[[nodiscard]] Path path_from_json(const Json& j);

[[nodiscard]] Json roots_to_json(const VertexSet& roots);
[[nodiscard]] VertexSet roots_from_json(const Json& j);

[[nodiscard]] Json to_json(const GridAtlas& a);
[[nodiscard]] GridAtlas atlas_from_json(const Json& j);

[[nodiscard]] Json to_json(const BlockingSeparation& b);
[[nodiscard]] BlockingSeparation blocking_from_json(const Json& j);

[[nodiscard]] Json to_json(const ReductionRecord& r);
[[nodiscard]] ReductionRecord record_from_json(const Json& j);

[[nodiscard]] Json to_json(const ValidationReport& r);

[[nodiscard]] Json to_json(const ExtractionParams& p);
[[nodiscard]] ExtractionParams params_from_json(const Json& j);

/// params, roots, atlas, subgrid, labeling, base, augmented, trace.
[[nodiscard]] Json result_to_json(const ExtractionParams& params, const ExtractionResult& r);
[[nodiscard]] ExtractionResult result_from_json(const Json& j);

/// One record per line.
[[nodiscard]] std::string trace_to_jsonl(const std::vector<ReductionRecord>& trace);
[[nodiscard]] std::vector<ReductionRecord> trace_from_jsonl(const std::string& text);

/// Stable text form: two-space indent and a trailing newline.
[[nodiscard]] std::string dump(const Json& j);

[[nodiscard]] std::string read_text(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, const std::string& text);
[[nodiscard]] Json read_json(const std::filesystem::path& path);

}  // namespace rootgrid::io

#endif  // ROOTGRID_IO_HPP
