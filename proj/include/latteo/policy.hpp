#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "latteo/bytes.hpp"

namespace latteo {

// Boolean attribute formula carried in the clear by every ABE ciphertext.
// Internal nodes are AND / OR / THRESHOLD(k-of-m); leaves name attributes.
struct Policy {
  enum class Kind : std::uint8_t { Leaf = 1, And = 2, Or = 3, Threshold = 4 };

  Kind kind = Kind::Leaf;
  std::string attribute;          // Leaf only
  std::uint16_t k = 0;            // Threshold only
  std::vector<Policy> children;   // non-Leaf

  static Policy leaf(std::string name);
  static Policy all_of(std::vector<Policy> kids);
  static Policy any_of(std::vector<Policy> kids);
  static Policy k_of(std::uint16_t k, std::vector<Policy> kids);

  // Structural validation: THRESHOLD 1 <= k <= m, internal nodes non-empty,
  // leaf names non-empty. Throws on violation.
  void validate() const;

  // Pure boolean/threshold evaluation against an attribute set.
  bool satisfied_by(const std::set<std::string>& attrs) const;

  // Leaf attribute names in pre-order (duplicates preserved).
  std::vector<std::string> leaves() const;

  bool operator==(const Policy& other) const;
};

// policy_satisfies: free-function spelling of Policy::satisfied_by.
inline bool policy_satisfies(const Policy& p, const std::set<std::string>& attrs) {
  return p.satisfied_by(attrs);
}

// Canonical byte encoding: 1-byte format version, then pre-order traversal
// with 1-byte node tags and length-prefixed UTF-8 leaf names.
Bytes serialize_policy(const Policy& p);
Policy deserialize_policy(BytesView b);

// Text grammar:
//   expr  := term ("AND" term)* | term ("OR" term)*     -- no mixing without parens
//   term  := leaf | "(" expr ")" | k "-of-{" leaf ("," leaf)* "}"
// Mixed AND/OR at one level is a parse error ("ambiguous: parenthesize").
// Errors carry the byte position.
Policy parse_policy(std::string_view text);

// Canonical text form; parse_policy(policy_to_text(p)) == p.
std::string policy_to_text(const Policy& p);

}  // namespace latteo
