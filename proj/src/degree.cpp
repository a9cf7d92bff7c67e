#include "kpt/degree.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

namespace kpt {

namespace {

std::vector<std::int64_t> parse_coords(const std::string& text) {
  std::vector<std::int64_t> out;
  std::string body = text;
  if (!body.empty() && (body.front() == '(' || body.front() == '[')) body = body.substr(1);
  if (!body.empty() && (body.back() == ')' || body.back() == ']')) body.pop_back();
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size())
      throw std::invalid_argument("bad degree literal '" + text + "'");
    out.push_back(value);
  }
  if (out.empty()) throw std::invalid_argument("empty degree literal");
  return out;
}

template <class V>
std::string coords_str(const V& c) {
  std::string out = "(";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(c[i]);
  }
  return out + ")";
}

}  // namespace

Degree::Degree(std::initializer_list<std::int64_t> coords) : c_(coords) {
  for (auto x : c_)
    if (x < 0) throw std::domain_error("degree coordinates must be non-negative");
}

Degree::Degree(std::vector<std::int64_t> coords) : c_(std::move(coords)) {
  for (auto x : c_)
    if (x < 0) throw std::domain_error("degree coordinates must be non-negative");
}

Degree Degree::unit(int k, int color) {
  if (color < 1 || color > k) throw std::out_of_range("color out of range");
  Degree d(k);
  d.c_[static_cast<std::size_t>(color - 1)] = 1;
  return d;
}

Degree Degree::ones(int k) {
  Degree d(k);
  std::fill(d.c_.begin(), d.c_.end(), 1);
  return d;
}

std::int64_t Degree::total() const { return std::accumulate(c_.begin(), c_.end(), std::int64_t{0}); }

bool Degree::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](auto x) { return x == 0; });
}

Degree& Degree::operator+=(const Degree& o) {
  if (o.k() != k()) throw std::invalid_argument("degree rank mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Degree& Degree::operator-=(const Degree& o) {
  if (o.k() != k()) throw std::invalid_argument("degree rank mismatch");
  if (!o.leq(*this)) throw std::domain_error("degree subtraction leaves N^k");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

bool Degree::leq(const Degree& o) const {
  if (o.k() != k()) return false;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] > o.c_[i]) return false;
  return true;
}

std::string Degree::str() const { return coords_str(c_); }

Degree Degree::parse(const std::string& text) { return Degree(parse_coords(text)); }

Degree join(const Degree& a, const Degree& b) {
  if (a.k() != b.k()) throw std::invalid_argument("degree rank mismatch");
  Degree out(a.k());
  for (int i = 0; i < a.k(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

Degree meet(const Degree& a, const Degree& b) {
  if (a.k() != b.k()) throw std::invalid_argument("degree rank mismatch");
  Degree out(a.k());
  for (int i = 0; i < a.k(); ++i) out[i] = std::min(a[i], b[i]);
  return out;
}

bool DegreeDelta::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](auto x) { return x == 0; });
}

DegreeDelta& DegreeDelta::operator+=(const DegreeDelta& o) {
  if (o.k() != k()) throw std::invalid_argument("degree rank mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

DegreeDelta& DegreeDelta::operator-=(const DegreeDelta& o) {
  if (o.k() != k()) throw std::invalid_argument("degree rank mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

DegreeDelta DegreeDelta::operator-() const {
  DegreeDelta out(*this);
  for (auto& x : out.c_) x = -x;
  return out;
}

std::string DegreeDelta::str() const { return coords_str(c_); }

DegreeDelta DegreeDelta::parse(const std::string& text) { return DegreeDelta(parse_coords(text)); }

}  // namespace kpt
