#include "rigged/serialize.hpp"

#include <cctype>
#include <charconv>
#include <vector>

#include "rigged/error.hpp"

namespace rigged {

namespace {

std::string_view strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

template <class Int>
Int parse_int(std::string_view s, const char* what) {
  s = strip(s);
  Int value{};
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (!s.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (s.empty() || ec != std::errc() || ptr != last) {
    throw InputError(std::string("cannot parse ") + what + " from '" + std::string(s) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  if (strip(s).empty()) return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace

std::string to_text(const Configuration& a) {
  std::string out = std::to_string(a.offset()) + ":";
  for (std::size_t i = 0; i < a.counts().size(); ++i) {
    if (i) out += ',';
    out += std::to_string(a.counts()[i]);
  }
  return out;
}

Configuration parse_configuration(std::string_view text) {
  text = strip(text);
  std::int64_t offset = 0;
  if (const auto colon = text.find(':'); colon != std::string_view::npos) {
    offset = parse_int<std::int64_t>(text.substr(0, colon), "offset");
    text = text.substr(colon + 1);
  }
  std::vector<int> counts;
  for (auto piece : split(text, ',')) {
    const int c = parse_int<int>(piece, "column count");
    if (c < 0) throw InputError("column counts must be non-negative");
    counts.push_back(c);
  }
  return Configuration(offset, std::move(counts));
}

nlohmann::json to_json(const Configuration& a) {
  return {{"offset", a.offset()}, {"counts", a.counts()}};
}

Configuration configuration_from_json(const nlohmann::json& j) {
  try {
    const auto offset = j.value("offset", std::int64_t{0});
    auto counts = j.at("counts").get<std::vector<int>>();
    return Configuration(offset, std::move(counts));
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed configuration JSON: ") + e.what());
  }
}

nlohmann::json to_json(const RiggedPartition& rp) {
  nlohmann::json parts = nlohmann::json::array();
  for (const auto& p : rp.parts()) parts.push_back({{"weight", p.weight}, {"rigging", p.rigging}});
  return {{"parts", parts}};
}

RiggedPartition rigged_partition_from_json(const nlohmann::json& j) {
  std::vector<RiggedPart> parts;
  try {
    for (const auto& p : j.at("parts")) {
      parts.push_back(RiggedPart{p.at("weight").get<int>(), p.at("rigging").get<std::int64_t>()});
    }
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed rigged partition JSON: ") + e.what());
  }
  return RiggedPartition(std::move(parts));
}

std::string to_text(const RiggedPartition& rp) {
  std::string weights;
  std::string riggings;
  for (std::size_t i = 0; i < rp.size(); ++i) {
    if (i) {
      weights += ',';
      riggings += ',';
    }
    weights += std::to_string(rp.parts()[i].weight);
    riggings += std::to_string(rp.parts()[i].rigging);
  }
  return "((" + weights + "),(" + riggings + "))";
}

RiggedPartition parse_rigged_partition(std::string_view text) {
  text = strip(text);
  if (!text.empty() && text.front() == '{') {
    try {
      return rigged_partition_from_json(nlohmann::json::parse(text));
    } catch (const nlohmann::json::parse_error& e) {
      throw InputError(std::string("malformed rigged partition JSON: ") + e.what());
    }
  }
  // ((w1,w2,...),(r1,r2,...))
  std::string compact;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) compact += ch;
  }
  if (compact == "()" || compact == "((),())" || compact.empty()) return {};
  if (compact.size() < 7 || compact.substr(0, 2) != "((" || compact.substr(compact.size() - 2) != "))") {
    throw InputError("expected ((weights),(riggings)), got '" + std::string(text) + "'");
  }
  const std::string_view body(compact.data() + 2, compact.size() - 4);
  const auto mid = body.find("),(");
  if (mid == std::string_view::npos) throw InputError("expected ((weights),(riggings))");
  const auto ws = split(body.substr(0, mid), ',');
  const auto rs = split(body.substr(mid + 3), ',');
  if (ws.size() != rs.size()) throw InputError("weights and riggings differ in length");
  std::vector<RiggedPart> parts;
  for (std::size_t i = 0; i < ws.size(); ++i) {
    parts.push_back(RiggedPart{parse_int<int>(ws[i], "weight"), parse_int<std::int64_t>(rs[i], "rigging")});
  }
  return RiggedPartition(std::move(parts));
}

nlohmann::json to_json(const QPolynomial& p) {
  nlohmann::json coeffs = nlohmann::json::object();
  for (const auto& [d, c] : p.terms()) coeffs[std::to_string(d)] = c.get_str();
  nlohmann::json order = nullptr;
  if (p.order()) order = *p.order();
  return {{"coeffs", coeffs}, {"order", order}};
}

QPolynomial qpolynomial_from_json(const nlohmann::json& j) {
  QPolynomial p;
  try {
    if (j.contains("order") && !j.at("order").is_null()) p = p.truncated(j.at("order").get<std::int64_t>());
    for (const auto& [deg, value] : j.at("coeffs").items()) {
      mpz_class c;
      if (c.set_str(value.get<std::string>(), 10) != 0) throw InputError("bad coefficient " + value.dump());
      p.add_term(parse_int<std::int64_t>(deg, "degree"), c);
    }
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed polynomial JSON: ") + e.what());
  }
  return p;
}

}  // namespace rigged
