#pragma once

#include <optional>
#include <string>
#include <vector>

struct sqlite3;

namespace sqlens {

/// Owning handle for one SQLite database file.
///
/// ReadOnly is the mode used everywhere in the pipeline; ReadWrite exists for
/// building fixture databases and creates the file when missing.
class SqliteDb {
 public:
  enum class Mode { ReadOnly, ReadWrite };

  SqliteDb(const std::string& path, Mode mode = Mode::ReadOnly);
  ~SqliteDb();

  SqliteDb(const SqliteDb&) = delete;
  SqliteDb& operator=(const SqliteDb&) = delete;
  SqliteDb(SqliteDb&& other) noexcept;
  SqliteDb& operator=(SqliteDb&& other) noexcept;

  sqlite3* raw() const { return db_; }
  const std::string& path() const { return path_; }
  bool read_only() const { return read_only_; }

  /// Runs one or more statements, discarding results. Fixture/test helper.
  void exec(const std::string& sql);

  /// Runs a query and returns every row as text cells (nullopt for NULL).
  std::vector<std::vector<std::optional<std::string>>> query_text(const std::string& sql) const;

 private:
  sqlite3* db_ = nullptr;
  std::string path_;
  bool read_only_ = true;
};

}  // namespace sqlens
