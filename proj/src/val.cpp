#include "bipermkit/val.hpp"

#include <stdexcept>

namespace bpk {

Val Val::list(std::vector<Val> items)
{
  Val v;
  v.kids_ = std::move(items);
  return v;
}

Val Val::list(std::initializer_list<Val> items)
{
  return list(std::vector<Val>(items));
}

Val Val::ints(std::vector<int> const &xs)
{
  Val v;
  v.kids_.reserve(xs.size());
  for (int x : xs)
    v.kids_.emplace_back(x);
  return v;
}

long Val::as_int() const
{
  if (!leaf_)
    throw std::logic_error("Val: expected integer, got " + str());
  return i_;
}

std::vector<Val> const &Val::items() const
{
  if (leaf_)
    throw std::logic_error("Val: expected list, got " + str());
  return kids_;
}

std::vector<int> Val::to_ints() const
{
  std::vector<int> r;
  for (auto const &k : items())
    r.push_back(static_cast<int>(k.as_int()));
  return r;
}

std::string Val::str() const
{
  if (leaf_)
    return std::to_string(i_);
  std::string s = "[";
  for (std::size_t k = 0; k < kids_.size(); ++k) {
    if (k)
      s += ",";
    s += kids_[k].str();
  }
  return s + "]";
}

nlohmann::json Val::to_json() const
{
  if (leaf_)
    return i_;
  auto j = nlohmann::json::array();
  for (auto const &k : kids_)
    j.push_back(k.to_json());
  return j;
}

Val Val::from_json(nlohmann::json const &j)
{
  if (j.is_number_integer())
    return Val(j.get<long>());
  if (!j.is_array())
    throw std::invalid_argument("descriptor must be an integer or an array");
  std::vector<Val> ks;
  for (auto const &e : j)
    ks.push_back(from_json(e));
  return list(std::move(ks));
}

bool operator==(Val const &a, Val const &b)
{
  if (a.leaf_ != b.leaf_)
    return false;
  if (a.leaf_)
    return a.i_ == b.i_;
  return a.kids_ == b.kids_;
}

std::strong_ordering operator<=>(Val const &a, Val const &b)
{
  if (a.leaf_ != b.leaf_)
    return a.leaf_ ? std::strong_ordering::less : std::strong_ordering::greater;
  if (a.leaf_)
    return a.i_ <=> b.i_;
  return std::lexicographical_compare_three_way(a.kids_.begin(), a.kids_.end(),
                                                b.kids_.begin(), b.kids_.end());
}

std::size_t ValHash::operator()(Val const &v) const
{
  if (v.is_int())
    return std::hash<long>()(v.as_int()) * 31 + 7;
  std::size_t h = 0x9e3779b9;
  for (auto const &k : v.items())
    h = h * 1000003 ^ (*this)(k);
  return h;
}

} // namespace bpk
