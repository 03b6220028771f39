#include "mahlerlab/result_store.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <fstream>
#include <nlohmann/json.hpp>

#include "mahlerlab/errors.hpp"
#include "mahlerlab/format.hpp"

namespace mahlerlab {
namespace {

using nlohmann::json;

std::string decimal(const Rational& v, Precision prec, Round mode) {
  return to_scientific(v, decimal_digits_for(prec), mode).text;
}

Integer integer_field(const json& j) {
  Integer v;
  if (!j.is_string() || !parse_integer(j.get<std::string>(), v)) {
    throw StoreError("expected an integer string, got " + j.dump());
  }
  return v;
}

Rational decimal_field(const json& j) {
  Rational v;
  if (!j.is_string() || !parse_decimal(j.get<std::string>(), v)) {
    throw StoreError("expected a decimal string, got " + j.dump());
  }
  return v;
}

std::string errno_text() { return std::strerror(errno); }

}  // namespace

std::string to_json_line(const WnRecord& r) {
  json argmin = json::array();
  for (const Integer& c : r.argmin.coefficients()) argmin.push_back(c.get_str());
  json j = {{"xi", r.xi},
            {"n", r.n},
            {"H", r.H.get_str()},
            {"w_lo", decimal(r.w_lo, r.prec, Round::kFloor)},
            {"w_hi", decimal(r.w_hi, r.prec, Round::kCeil)},
            {"argmin", std::move(argmin)},
            {"prec", r.prec},
            {"skipped", r.skipped}};
  return j.dump();
}

WnRecord record_from_json(const std::string& line) {
  json j;
  try {
    j = json::parse(line);
  } catch (const json::exception& e) {
    throw StoreError(std::string("malformed store line: ") + e.what());
  }
  try {
    WnRecord r;
    r.xi = j.at("xi").get<std::string>();
    r.n = j.at("n").get<unsigned>();
    r.H = integer_field(j.at("H"));
    r.w_lo = decimal_field(j.at("w_lo"));
    r.w_hi = decimal_field(j.at("w_hi"));
    std::vector<Integer> c;
    for (const json& v : j.at("argmin")) c.push_back(integer_field(v));
    r.argmin = IntegerPolynomial(std::move(c));
    r.prec = j.at("prec").get<Precision>();
    r.skipped = j.at("skipped").get<std::uint64_t>();
    if (r.n < 1 || r.H < 1 || sgn(r.w_lo) <= 0 || r.w_lo > r.w_hi || r.argmin.size() != r.n + 1) {
      throw StoreError("inconsistent record: " + line);
    }
    return r;
  } catch (const json::exception& e) {
    throw StoreError(std::string("malformed store record: ") + e.what());
  }
}

ResultStore::Key ResultStore::key_of(const std::string& xi, unsigned n, const Integer& H) {
  return {xi, n, H.get_str()};
}

ResultStore::ResultStore(const std::filesystem::path& path, std::ostream* warnings) : path_(path) {
  fd_ = ::open(path.c_str(), O_WRONLY | O_APPEND | O_CREAT | O_CLOEXEC, 0644);
  if (fd_ < 0) throw StoreError("cannot open store " + path.string() + ": " + errno_text());
  if (::flock(fd_, LOCK_EX | LOCK_NB) != 0) {
    ::close(fd_);
    fd_ = -1;
    throw StoreError("store " + path.string() + " is locked by another writer");
  }
  std::ifstream in(path);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    WnRecord r;
    try {
      r = record_from_json(line);
    } catch (const StoreError& e) {
      throw StoreError(path.string() + ":" + std::to_string(line_no) + ": " + e.what());
    }
    auto [it, inserted] = index_.insert_or_assign(key_of(r.xi, r.n, r.H), r);
    if (!inserted) {
      ++duplicates_;
      if (warnings) {
        *warnings << "warning: " << path.string() << ":" << line_no << ": duplicate key (" << r.xi << ", "
                  << r.n << ", " << r.H.get_str() << "); keeping the later record\n";
      }
    }
  }
}

ResultStore::~ResultStore() {
  if (fd_ >= 0) ::close(fd_);  // releases the lock
}

std::optional<WnRecord> ResultStore::find(const std::string& xi, unsigned n, const Integer& H) const {
  auto it = index_.find(key_of(xi, n, H));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

void ResultStore::append(const WnRecord& record) {
  const std::string line = to_json_line(record) + "\n";
  std::size_t done = 0;
  while (done < line.size()) {
    ssize_t w = ::write(fd_, line.data() + done, line.size() - done);
    if (w < 0) {
      if (errno == EINTR) continue;
      throw StoreError("write to " + path_.string() + " failed: " + errno_text());
    }
    done += static_cast<std::size_t>(w);
  }
  if (::fsync(fd_) != 0 && errno != EINVAL) {
    throw StoreError("sync of " + path_.string() + " failed: " + errno_text());
  }
  // Keep the stored (decimal) form so later lookups match a reload.
  index_.insert_or_assign(key_of(record.xi, record.n, record.H), record_from_json(line));
}

std::vector<WnRecord> ResultStore::records() const {
  std::vector<WnRecord> out;
  out.reserve(index_.size());
  for (const auto& [key, r] : index_) out.push_back(r);
  return out;
}

}  // namespace mahlerlab
