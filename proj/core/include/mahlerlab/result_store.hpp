#ifndef MAHLERLAB_RESULT_STORE_HPP
#define MAHLERLAB_RESULT_STORE_HPP

#include <filesystem>
#include <map>
#include <ostream>
#include <string>
#include <tuple>
#include <vector>

#include "mahlerlab/mahler.hpp"

namespace mahlerlab {

/// One JSON object per line:
/// {"xi":..,"n":..,"H":"..","w_lo":"..","w_hi":"..","argmin":[".."],"prec":..,"skipped":..}
std::string to_json_line(const WnRecord& record);
/// Throws StoreError on malformed input.
WnRecord record_from_json(const std::string& line);

/// Append-only JSON-lines store of WnRecords keyed by (xi, n, H).
///
/// The file is opened for appending and an exclusive advisory lock is held
/// for the lifetime of the object, so a second writer fails fast with
/// StoreError. On load, a repeated key replaces the earlier record and a
/// warning goes to `warnings` (if given).
class ResultStore : public RecordSink {
 public:
  explicit ResultStore(const std::filesystem::path& path, std::ostream* warnings = nullptr);
  ~ResultStore() override;
  ResultStore(const ResultStore&) = delete;
  ResultStore& operator=(const ResultStore&) = delete;

  std::optional<WnRecord> find(const std::string& xi, unsigned n, const Integer& H) const override;
  /// Writes and flushes one line; StoreError on failure.
  void append(const WnRecord& record) override;

  /// Unique records, ordered by key.
  std::vector<WnRecord> records() const;
  std::size_t size() const { return index_.size(); }
  std::size_t duplicates_on_load() const { return duplicates_; }
  const std::filesystem::path& path() const { return path_; }

 private:
  using Key = std::tuple<std::string, unsigned, std::string>;
  static Key key_of(const std::string& xi, unsigned n, const Integer& H);

  std::filesystem::path path_;
  int fd_ = -1;
  std::map<Key, WnRecord> index_;
  std::size_t duplicates_ = 0;
};

}  // namespace mahlerlab

#endif  // MAHLERLAB_RESULT_STORE_HPP
