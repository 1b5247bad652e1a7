#pragma once

#include <complex>
#include <map>
#include <string>

namespace hfs::golden {

/// One reference value: decimal text with at least 30 significant digits and
/// a description of how it was produced.
struct Entry {
  std::string real_text;
  std::string imag_text;  // empty for real entries
  std::string oracle;

  bool is_complex() const { return !imag_text.empty(); }
  double real() const;
  std::complex<double> value() const;
};

/// Read-only view of a golden-values JSON file:
/// {name: {value: "digits" | ["re", "im"], oracle: "..."}}.
class GoldenFile {
 public:
  static GoldenFile load(const std::string& path);

  const Entry& at(const std::string& name) const;
  double real(const std::string& name) const { return at(name).real(); }
  std::complex<double> value(const std::string& name) const { return at(name).value(); }
  bool contains(const std::string& name) const { return entries_.count(name) != 0; }
  std::size_t size() const { return entries_.size(); }
  const std::string& path() const { return path_; }
  const std::map<std::string, Entry>& entries() const { return entries_; }

 private:
  std::string path_;
  std::map<std::string, Entry> entries_;
};

/// The bundled golden file.
std::string default_path();

}  // namespace hfs::golden
