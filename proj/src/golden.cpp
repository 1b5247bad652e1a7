#include "hfs/app/golden.hpp"

#include <fstream>
#include <json.hpp>

#include "hfs/error.hpp"

#ifndef HFS_DEFAULT_GOLDEN
#define HFS_DEFAULT_GOLDEN "data/golden.json"
#endif

namespace hfs::golden {

namespace {

double parse(const std::string& text, const std::string& name) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw ValidationError("golden: entry '" + name + "' is not a number");
  }
  if (used != text.size()) throw ValidationError("golden: entry '" + name + "' has trailing characters");
  return v;
}

}  // namespace

double Entry::real() const { return parse(real_text, "value"); }

std::complex<double> Entry::value() const {
  return {parse(real_text, "value"), is_complex() ? parse(imag_text, "value") : 0.0};
}

GoldenFile GoldenFile::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("golden: cannot open " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError("golden: malformed JSON in " + path + ": " + e.what());
  }
  if (!doc.is_object()) throw ValidationError("golden: top level must be an object");

  GoldenFile g;
  g.path_ = path;
  for (const auto& [name, item] : doc.items()) {
    if (!item.is_object() || !item.contains("value")) {
      throw ValidationError("golden: entry '" + name + "' lacks a value");
    }
    Entry e;
    const auto& v = item["value"];
    if (v.is_string()) {
      e.real_text = v.get<std::string>();
    } else if (v.is_array() && v.size() == 2 && v[0].is_string() && v[1].is_string()) {
      e.real_text = v[0].get<std::string>();
      e.imag_text = v[1].get<std::string>();
    } else {
      throw ValidationError("golden: entry '" + name + "' must be a string or [re, im]");
    }
    if (item.contains("oracle") && item["oracle"].is_string()) e.oracle = item["oracle"].get<std::string>();
    parse(e.real_text, name);
    if (e.is_complex()) parse(e.imag_text, name);
    g.entries_.emplace(name, std::move(e));
  }
  return g;
}

const Entry& GoldenFile::at(const std::string& name) const {
  const auto it = entries_.find(name);
  if (it == entries_.end()) throw ValidationError("golden: no entry named '" + name + "' in " + path_);
  return it->second;
}

std::string default_path() { return HFS_DEFAULT_GOLDEN; }

}  // namespace hfs::golden
