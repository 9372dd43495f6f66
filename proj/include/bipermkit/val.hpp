#ifndef BIPERMKIT_VAL_HPP
#define BIPERMKIT_VAL_HPP

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include <json.hpp>

namespace bpk {

// Structural descriptor: an integer or a list of descriptors. Objects and
// morphisms of every lazily presented category are Vals.
class Val
{
public:
  Val() = default;
  Val(long v)
  : leaf_(true), i_(v)
  {}
  Val(int v)
  : leaf_(true), i_(v)
  {}

  static Val list(std::vector<Val> items);
  static Val list(std::initializer_list<Val> items);
  static Val ints(std::vector<int> const &xs);

  bool is_int() const { return leaf_; }
  long as_int() const;
  std::vector<Val> const &items() const;
  std::size_t size() const { return kids_.size(); }
  Val const &operator[](std::size_t i) const { return kids_.at(i); }
  std::vector<int> to_ints() const;

  std::string str() const;
  nlohmann::json to_json() const;
  static Val from_json(nlohmann::json const &j);

  friend bool operator==(Val const &a, Val const &b);
  friend std::strong_ordering operator<=>(Val const &a, Val const &b);

private:
  bool leaf_ = false;
  long i_ = 0;
  std::vector<Val> kids_;
};

struct ValHash
{
  std::size_t operator()(Val const &v) const;
};

} // namespace bpk

#endif
