#include "latteo/policy.hpp"

#include <algorithm>
#include <cctype>

namespace latteo {

Policy Policy::leaf(std::string name) {
  Policy p;
  p.kind = Kind::Leaf;
  p.attribute = std::move(name);
  return p;
}

Policy Policy::all_of(std::vector<Policy> kids) {
  Policy p;
  p.kind = Kind::And;
  p.children = std::move(kids);
  return p;
}

Policy Policy::any_of(std::vector<Policy> kids) {
  Policy p;
  p.kind = Kind::Or;
  p.children = std::move(kids);
  return p;
}

Policy Policy::k_of(std::uint16_t k, std::vector<Policy> kids) {
  Policy p;
  p.kind = Kind::Threshold;
  p.k = k;
  p.children = std::move(kids);
  return p;
}

void Policy::validate() const {
  switch (kind) {
    case Kind::Leaf:
      if (attribute.empty()) throw Error("policy: empty leaf name");
      return;
    case Kind::And:
    case Kind::Or:
      if (children.empty()) throw Error("policy: internal node without children");
      break;
    case Kind::Threshold:
      if (children.empty()) throw Error("policy: internal node without children");
      if (k < 1 || k > children.size()) throw Error("policy: threshold k out of range");
      break;
  }
  for (const Policy& c : children) c.validate();
}

bool Policy::satisfied_by(const std::set<std::string>& attrs) const {
  switch (kind) {
    case Kind::Leaf:
      return attrs.count(attribute) != 0;
    case Kind::And:
      return std::all_of(children.begin(), children.end(),
                         [&](const Policy& c) { return c.satisfied_by(attrs); });
    case Kind::Or:
      return std::any_of(children.begin(), children.end(),
                         [&](const Policy& c) { return c.satisfied_by(attrs); });
    case Kind::Threshold: {
      std::size_t hits = 0;
      for (const Policy& c : children)
        if (c.satisfied_by(attrs)) ++hits;
      return hits >= k;
    }
  }
  return false;
}

std::vector<std::string> Policy::leaves() const {
  std::vector<std::string> out;
  if (kind == Kind::Leaf) {
    out.push_back(attribute);
    return out;
  }
  for (const Policy& c : children) {
    auto sub = c.leaves();
    out.insert(out.end(), sub.begin(), sub.end());
  }
  return out;
}

bool Policy::operator==(const Policy& other) const {
  if (kind != other.kind || attribute != other.attribute || k != other.k ||
      children.size() != other.children.size())
    return false;
  for (std::size_t i = 0; i < children.size(); ++i)
    if (!(children[i] == other.children[i])) return false;
  return true;
}

namespace {

constexpr std::uint8_t kPolicyFormatVersion = 1;

void serialize_node(const Policy& p, ByteWriter& w) {
  w.u8(static_cast<std::uint8_t>(p.kind));
  switch (p.kind) {
    case Policy::Kind::Leaf:
      w.u16(static_cast<std::uint16_t>(p.attribute.size()));
      w.raw(to_bytes(p.attribute));
      return;
    case Policy::Kind::Threshold:
      w.u16(p.k);
      break;
    default:
      break;
  }
  w.u16(static_cast<std::uint16_t>(p.children.size()));
  for (const Policy& c : p.children) serialize_node(c, w);
}

Policy deserialize_node(ByteReader& r) {
  auto kind = static_cast<Policy::Kind>(r.u8());
  Policy p;
  p.kind = kind;
  switch (kind) {
    case Policy::Kind::Leaf: {
      std::uint16_t n = r.u16();
      p.attribute = to_string(r.raw(n));
      return p;
    }
    case Policy::Kind::Threshold:
      p.k = r.u16();
      break;
    case Policy::Kind::And:
    case Policy::Kind::Or:
      break;
    default:
      throw Error("decode failure: unknown policy node tag");
  }
  std::uint16_t count = r.u16();
  p.children.reserve(count);
  for (std::uint16_t i = 0; i < count; ++i) p.children.push_back(deserialize_node(r));
  return p;
}

}  // namespace

Bytes serialize_policy(const Policy& p) {
  p.validate();
  ByteWriter w;
  w.u8(kPolicyFormatVersion);
  serialize_node(p, w);
  return w.take();
}

Policy deserialize_policy(BytesView b) {
  ByteReader r(b);
  if (r.u8() != kPolicyFormatVersion) throw Error("decode failure: policy format version");
  Policy p = deserialize_node(r);
  r.expect_done();
  p.validate();
  return p;
}

// ---------------------------------------------------------------------------
// Text grammar

namespace {

struct Token {
  enum class Type { Word, LParen, RParen, LBrace, RBrace, Comma, End };
  Type type;
  std::string text;
  std::size_t pos;
};

class Lexer {
 public:
  explicit Lexer(std::string_view s) : s_(s) {}

  Token next() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    std::size_t start = i_;
    if (i_ >= s_.size()) return {Token::Type::End, "", start};
    char c = s_[i_];
    switch (c) {
      case '(': ++i_; return {Token::Type::LParen, "(", start};
      case ')': ++i_; return {Token::Type::RParen, ")", start};
      case '{': ++i_; return {Token::Type::LBrace, "{", start};
      case '}': ++i_; return {Token::Type::RBrace, "}", start};
      case ',': ++i_; return {Token::Type::Comma, ",", start};
      default: break;
    }
    if (!word_char(c))
      throw Error("policy syntax error at position " + std::to_string(start) +
                  ": unexpected character '" + std::string(1, c) + "'");
    while (i_ < s_.size() && word_char(s_[i_])) ++i_;
    return {Token::Type::Word, std::string(s_.substr(start, i_ - start)), start};
  }

 private:
  static bool word_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '-';
  }
  std::string_view s_;
  std::size_t i_ = 0;
};

class Parser {
 public:
  explicit Parser(std::string_view s) : lex_(s) { advance(); }

  Policy parse() {
    Policy p = expr();
    expect(Token::Type::End, "end of input");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) {
    throw Error("policy syntax error at position " + std::to_string(tok_.pos) + ": " + what);
  }

  void advance() { tok_ = lex_.next(); }

  void expect(Token::Type t, const std::string& what) {
    if (tok_.type != t) fail("expected " + what);
    if (t != Token::Type::End) advance();
  }

  Policy expr() {
    std::vector<Policy> terms;
    terms.push_back(term());
    std::string op;
    while (tok_.type == Token::Type::Word && (tok_.text == "AND" || tok_.text == "OR")) {
      if (op.empty()) {
        op = tok_.text;
      } else if (op != tok_.text) {
        fail("ambiguous: parenthesize mixed AND/OR");
      }
      advance();
      terms.push_back(term());
    }
    if (terms.size() == 1) return std::move(terms[0]);
    return op == "AND" ? Policy::all_of(std::move(terms)) : Policy::any_of(std::move(terms));
  }

  Policy term() {
    if (tok_.type == Token::Type::LParen) {
      advance();
      Policy p = expr();
      expect(Token::Type::RParen, "')'");
      return p;
    }
    if (tok_.type != Token::Type::Word) fail("expected attribute, '(' or threshold");
    std::string word = tok_.text;
    std::size_t word_pos = tok_.pos;
    advance();
    // "k-of-" immediately followed by "{a,b,c}"
    if (tok_.type == Token::Type::LBrace) {
      std::uint16_t k = parse_threshold_count(word, word_pos);
      advance();
      std::vector<Policy> kids;
      kids.push_back(leaf_token());
      while (tok_.type == Token::Type::Comma) {
        advance();
        kids.push_back(leaf_token());
      }
      expect(Token::Type::RBrace, "'}'");
      if (k < 1 || k > kids.size())
        throw Error("policy syntax error at position " + std::to_string(word_pos) +
                    ": threshold k out of range");
      return Policy::k_of(k, std::move(kids));
    }
    if (word == "AND" || word == "OR") fail("operator in place of attribute");
    return Policy::leaf(word);
  }

  Policy leaf_token() {
    if (tok_.type != Token::Type::Word) fail("expected attribute name");
    if (tok_.text == "AND" || tok_.text == "OR") fail("operator in place of attribute");
    Policy p = Policy::leaf(tok_.text);
    advance();
    return p;
  }

  std::uint16_t parse_threshold_count(const std::string& word, std::size_t pos) {
    // word must look like "<digits>-of-"
    std::size_t dash = word.find("-of-");
    if (dash == std::string::npos || dash == 0 || dash + 4 != word.size())
      throw Error("policy syntax error at position " + std::to_string(pos) +
                  ": expected k-of-{...}");
    for (std::size_t i = 0; i < dash; ++i)
      if (!std::isdigit(static_cast<unsigned char>(word[i])))
        throw Error("policy syntax error at position " + std::to_string(pos) +
                    ": threshold count must be numeric");
    unsigned long v = std::stoul(word.substr(0, dash));
    if (v == 0 || v > 0xffff)
      throw Error("policy syntax error at position " + std::to_string(pos) +
                  ": threshold k out of range");
    return static_cast<std::uint16_t>(v);
  }

  Lexer lex_;
  Token tok_{Token::Type::End, "", 0};
};

void to_text(const Policy& p, std::string& out, bool top) {
  switch (p.kind) {
    case Policy::Kind::Leaf:
      out += p.attribute;
      return;
    case Policy::Kind::And:
    case Policy::Kind::Or: {
      const char* op = p.kind == Policy::Kind::And ? " AND " : " OR ";
      if (!top) out += '(';
      for (std::size_t i = 0; i < p.children.size(); ++i) {
        if (i) out += op;
        to_text(p.children[i], out, false);
      }
      if (!top) out += ')';
      return;
    }
    case Policy::Kind::Threshold: {
      out += std::to_string(p.k);
      out += "-of-{";
      for (std::size_t i = 0; i < p.children.size(); ++i) {
        if (i) out += ',';
        out += p.children[i].attribute;
      }
      out += '}';
      return;
    }
  }
}

}  // namespace

Policy parse_policy(std::string_view text) {
  Parser parser(text);
  Policy p = parser.parse();
  p.validate();
  return p;
}

std::string policy_to_text(const Policy& p) {
  std::string out;
  to_text(p, out, true);
  return out;
}

}  // namespace latteo
