#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace sqlens {

class SqliteDb;
class CompletionBackend;
struct QuestionContext;
struct RetrievedValue;

/// (table, column) pair in catalog-canonical spelling.
using ColumnRef = std::pair<std::string, std::string>;
using ColumnRefSet = std::set<ColumnRef>;

struct ForeignKey {
  std::string column;         // local column
  std::string foreign_table;
  std::string foreign_column;
};

struct ColumnInfo {
  std::string name;
  std::string declared_type;
  std::optional<std::string> description;
  std::vector<std::string> value_examples;  // up to 3 distinct non-null cells
};

struct TableInfo {
  std::string name;
  std::vector<ColumnInfo> columns;
  std::vector<std::string> primary_key;
  std::vector<ForeignKey> foreign_keys;

  const ColumnInfo* find_column(std::string_view name) const;
};

/// Canonical schema model of one benchmark database.
struct SchemaCatalog {
  std::string db_id;
  std::vector<TableInfo> tables;

  const TableInfo* find_table(std::string_view name) const;
  bool has_column(std::string_view table, std::string_view column) const;
  /// Resolves case-insensitively to the catalog's spelling.
  std::optional<ColumnRef> resolve(std::string_view table, std::string_view column) const;
  ColumnRefSet all_columns() const;
};

/// Set of selected (table, column) entries. Selected tables always keep their
/// full primary key so joins remain expressible.
struct ColumnSelection {
  ColumnRefSet entries;

  bool contains(std::string_view table, std::string_view column) const;
  bool contains_table(std::string_view table) const;
};

/// Union of the schema referenced by two candidate queries.
struct SchemaSubset {
  ColumnRefSet entries;
  std::pair<int, int> provenance{-1, -1};  // candidate ids, when known
};

/// Reads every user table of an opened database into a catalog. Column order
/// follows storage order; value_examples holds up to 3 distinct non-null,
/// non-blob cell values of at most 64 characters each.
///
/// Throws EmptyDatabaseError when the database has no user tables.
SchemaCatalog introspect_database(const SqliteDb& db);

/// Merges BIRD `database_description/*.csv` column descriptions into the
/// catalog. Missing directory or malformed rows are ignored.
void apply_bird_descriptions(SchemaCatalog& catalog, const std::string& description_dir);

/// Renders the catalog as CREATE-TABLE-style prompt text with `--` comments.
/// With a selection, only selected tables/columns are emitted (key clauses
/// always are). A shuffle seed permutes table and intra-table column order
/// deterministically; without one, storage order is preserved.
///
/// Throws InvalidSelectionError when the selection names unknown columns.
std::string render_schema(const SchemaCatalog& catalog,
                          const ColumnSelection* selection = nullptr,
                          std::optional<std::uint64_t> shuffle_seed = std::nullopt);

/// Asks the backend which columns matter for the question and unions the
/// answer with the columns hosting retrieved values plus the primary keys of
/// every selected table. Falls back to the full catalog when the backend
/// response contains nothing parseable.
ColumnSelection select_columns(const QuestionContext& ctx, const SchemaCatalog& catalog,
                               const std::vector<RetrievedValue>& retrieved,
                               CompletionBackend& llm);

/// Best-effort lexical extraction of the catalog columns referenced by a SQL
/// string. Resolves FROM/JOIN aliases, expands `*` to all columns of the
/// in-scope tables, and silently ignores anything that does not resolve.
ColumnRefSet extract_identifiers(const std::string& sql, const SchemaCatalog& catalog);

/// extract_identifiers(sql_a) ∪ extract_identifiers(sql_b), plus the primary
/// keys of every table that contributed an entry.
SchemaSubset schema_union(const SchemaCatalog& catalog, const std::string& sql_a,
                          const std::string& sql_b);

}  // namespace sqlens
