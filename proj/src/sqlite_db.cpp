#include "sqlens/sqlite_db.hpp"

#include <sqlite3.h>

#include <utility>

#include "sqlens/errors.hpp"

namespace sqlens {

SqliteDb::SqliteDb(const std::string& path, Mode mode) : path_(path) {
  int flags = mode == Mode::ReadOnly ? SQLITE_OPEN_READONLY
                                     : (SQLITE_OPEN_READWRITE | SQLITE_OPEN_CREATE);
  int rc = sqlite3_open_v2(path.c_str(), &db_, flags, nullptr);
  if (rc != SQLITE_OK) {
    std::string msg = db_ ? sqlite3_errmsg(db_) : "out of memory";
    if (db_) sqlite3_close(db_);
    db_ = nullptr;
    throw IoError("cannot open database '" + path + "': " + msg);
  }
  read_only_ = mode == Mode::ReadOnly;
  sqlite3_busy_timeout(db_, 5000);
}

SqliteDb::~SqliteDb() {
  if (db_) sqlite3_close(db_);
}

SqliteDb::SqliteDb(SqliteDb&& other) noexcept
    : db_(other.db_), path_(std::move(other.path_)), read_only_(other.read_only_) {
  other.db_ = nullptr;
}

SqliteDb& SqliteDb::operator=(SqliteDb&& other) noexcept {
  if (this != &other) {
    if (db_) sqlite3_close(db_);
    db_ = other.db_;
    path_ = std::move(other.path_);
    read_only_ = other.read_only_;
    other.db_ = nullptr;
  }
  return *this;
}

void SqliteDb::exec(const std::string& sql) {
  char* err = nullptr;
  int rc = sqlite3_exec(db_, sql.c_str(), nullptr, nullptr, &err);
  if (rc != SQLITE_OK) {
    std::string msg = err ? err : "unknown error";
    sqlite3_free(err);
    throw IoError("exec failed on '" + path_ + "': " + msg);
  }
}

std::vector<std::vector<std::optional<std::string>>> SqliteDb::query_text(
    const std::string& sql) const {
  sqlite3_stmt* stmt = nullptr;
  int rc = sqlite3_prepare_v2(db_, sql.c_str(), -1, &stmt, nullptr);
  if (rc != SQLITE_OK) {
    throw IoError("query failed on '" + path_ + "': " + sqlite3_errmsg(db_));
  }
  std::vector<std::vector<std::optional<std::string>>> rows;
  while ((rc = sqlite3_step(stmt)) == SQLITE_ROW) {
    int n = sqlite3_column_count(stmt);
    std::vector<std::optional<std::string>> row;
    row.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      if (sqlite3_column_type(stmt, i) == SQLITE_NULL) {
        row.emplace_back(std::nullopt);
      } else {
        const unsigned char* text = sqlite3_column_text(stmt, i);
        row.emplace_back(text ? reinterpret_cast<const char*>(text) : "");
      }
    }
    rows.push_back(std::move(row));
  }
  bool ok = rc == SQLITE_DONE;
  std::string msg = ok ? "" : sqlite3_errmsg(db_);
  sqlite3_finalize(stmt);
  if (!ok) throw IoError("query failed on '" + path_ + "': " + msg);
  return rows;
}

}  // namespace sqlens
