#include "pgconn/report_io.hpp"

#include <sstream>

namespace pgconn {

nlohmann::json to_json(const VerificationReport& r) {
  using nlohmann::json;
  json trace = json::array();
  for (const auto& h : r.predicted.trace) trace.push_back({{"cond", h.condition}, {"holds", h.holds}});
  json out;
  out["group"] = r.group_label;
  out["theorem"] = r.theorem_id;
  out["applicable"] = r.predicted.applicable;
  out["case"] = r.predicted.case_tag;
  out["hypothesis_trace"] = std::move(trace);
  out["predicted_kappa"] = r.predicted.kappa ? json(*r.predicted.kappa) : json(nullptr);
  out["observed_kappa"] = r.observed_kappa ? json(*r.observed_kappa) : json(nullptr);
  out["predicted_cutsets"] = r.predicted.cutset_description;
  out["observed_cutsets"] = r.observed_cutsets ? json(*r.observed_cutsets) : json(nullptr);
  if (r.cutsets_partial) out["observed_cutsets_partial"] = true;
  out["verdict"] = to_string(r.verdict);
  if (!r.note.empty()) out["note"] = r.note;
  return out;
}

nlohmann::json to_json(const PropertySummary& s) {
  using nlohmann::json;
  static const char* names[] = {"pass", "fail", "skipped", "skipped-resource"};
  json groups = json::array();
  for (const auto& o : s.outcomes) {
    json item{{"group", o.group_label}, {"status", names[static_cast<int>(o.status)]}};
    if (!o.detail.empty()) item["detail"] = o.detail;
    groups.push_back(std::move(item));
  }
  return {{"suite", s.suite_id}, {"passed", s.all_passed()}, {"groups", std::move(groups)}};
}

std::string export_dot(const Group& g, const PowerGraph& graph, const VertexSet& removed) {
  std::ostringstream out;
  out << "graph \"P(" << g.name() << ")\" {\n";
  const std::size_t n = graph.vertex_count();
  for (std::size_t v = 0; v < n; ++v)
    if (!removed.test(v))
      out << "  " << v << " [label=\"" << v << ":" << g.order(Element{static_cast<std::uint32_t>(v)})
          << "\"];\n";
  for (std::size_t u = 0; u < n; ++u) {
    if (removed.test(u)) continue;
    const auto& row = graph.neighbors(u);
    for (auto v = row.find_next(u); v != VertexSet::npos; v = row.find_next(v))
      if (!removed.test(v)) out << "  " << u << " -- " << v << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace pgconn
