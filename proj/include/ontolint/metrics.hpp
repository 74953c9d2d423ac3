#pragma once
// Query-based reports as deterministic tables: entity-type quantities,
// property overview, space/concept/activity coverage, OWL constraint usage.

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "ontolint/entity_index.hpp"
#include "ontolint/format.hpp"
#include "ontolint/graph.hpp"
#include "ontolint/vocabulary.hpp"

namespace ontolint {

using Cell = std::variant<std::uint64_t, std::string>;

std::string cell_text(const Cell& c);

struct MetricsTable {
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;  // each row has exactly |columns| cells
};

// One row per top-level entity type: entities = instances + subclasses.
MetricsTable report_entity_types(const Graph& g, const EntityIndex& idx, const Vocabulary& v);

// One row per declared property, sorted by assertion count descending.
MetricsTable report_properties(const Graph& g, const EntityIndex& idx, const Vocabulary& v);

// Technological-space coverage metrics.
MetricsTable report_spaces(const Graph& g, const EntityIndex& idx, const Vocabulary& v);

// Language-concept coverage metrics.
MetricsTable report_concepts(const Graph& g, const EntityIndex& idx, const Vocabulary& v);

// SE-activity coverage metrics.
MetricsTable report_activities(const Graph& g, const EntityIndex& idx, const Vocabulary& v);

// OWL constraint usage counts.
MetricsTable report_constraints(const Graph& g, const Vocabulary& v);

// The stable table-name -> report mapping used by the CLI.
std::vector<std::string> table_names();

// Renders a table; output always ends with a newline. CSV rows use RFC 4180
// quoting; JSON keeps integer cells as numbers.
std::string serialize_table(const MetricsTable& t, OutputFormat format);

}  // namespace ontolint
