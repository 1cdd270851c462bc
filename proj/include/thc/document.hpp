#pragma once

#include <charconv>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "thc/error.hpp"
#include "thc/finset.hpp"
#include "thc/poset.hpp"

// Line-oriented input documents:
//
//   THCDOC 1
//   INSTANCE finset              (optional; finset is the default)
//   OBJECTS
//   a 2                          (finset: name size)
//   p 3 0<=1 1<=2                (poset: name size relation pairs; the
//                                 reflexive-transitive closure is taken)
//   MORPHISMS
//   f a b 0 1                    (name dom cod table entries)
//   CLASSES
//   c f g                        (name member morphism names)
//   COMMANDPARAMS
//   corrupt-transpose-left 2 2 2 0 1
//
// '#' starts a whole-line comment; blank lines are skipped. Every parse or
// resolution error carries the offending line number in its message.

namespace thc {

enum class InstanceKind { finset, poset };

inline std::string instance_name(InstanceKind k) {
  return k == InstanceKind::finset ? "finset" : "poset";
}

struct ParamRow {
  int line = 0;
  std::vector<std::string> tokens;  // non-empty; tokens[0] is the key
};

struct Document {
  InstanceKind instance = InstanceKind::finset;
  bool instance_declared = false;

  std::vector<std::string> object_names;  // declaration order
  std::map<std::string, FinObject> fin_objects;
  std::map<std::string, PosetObject> poset_objects;

  std::vector<std::string> morphism_names;
  std::map<std::string, FinMorphism> fin_morphisms;
  std::map<std::string, MonotoneMap> poset_morphisms;

  std::vector<std::string> class_names;
  std::map<std::string, std::vector<std::string>> classes;  // member names

  std::vector<ParamRow> params;

  const ParamRow* find_param(const std::string& key) const {
    for (const auto& row : params)
      if (row.tokens[0] == key) return &row;
    return nullptr;
  }
};

namespace detail {

[[noreturn]] inline void doc_fail(int line, const std::string& code, const std::string& msg) {
  fail(code, "line " + std::to_string(line) + ": " + msg);
}

inline int doc_int(int line, const std::string& tok) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    doc_fail(line, "doc-parse", "expected an integer, got '" + tok + "'");
  return value;
}

inline bool doc_identifier(const std::string& tok) {
  if (tok.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(tok[0])) || tok[0] == '_')) return false;
  for (char c : tok)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-')) return false;
  return true;
}

inline std::vector<std::string> doc_tokens(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> out;
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

// "i<=j" -> (i, j)
inline std::pair<int, int> doc_relation_pair(int line, const std::string& tok) {
  auto at = tok.find("<=");
  if (at == std::string::npos)
    doc_fail(line, "doc-parse", "expected a relation pair like 0<=1, got '" + tok + "'");
  return {doc_int(line, tok.substr(0, at)), doc_int(line, tok.substr(at + 2))};
}

}  // namespace detail

// `kind_override` comes from the command line; a conflicting INSTANCE line is
// rejected rather than silently shadowed.
inline Document parse_document(const std::string& text,
                               std::optional<InstanceKind> kind_override = std::nullopt) {
  using detail::doc_fail;
  Document doc;
  if (kind_override) doc.instance = *kind_override;

  enum class Section { none, objects, morphisms, classes, params };
  Section section = Section::none;
  bool saw_header = false;
  bool saw_section = false;
  std::vector<char> seen_section(4, 0);
  // class member resolution is deferred so the error can cite the line
  std::vector<std::pair<int, std::string>> class_lines;

  std::istringstream input(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(input, raw)) {
    ++lineno;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    auto first = raw.find_first_not_of(" \t");
    if (first == std::string::npos || raw[first] == '#') continue;
    auto tokens = detail::doc_tokens(raw);

    if (!saw_header) {
      if (tokens.size() != 2 || tokens[0] != "THCDOC")
        doc_fail(lineno, "doc-parse", "expected 'THCDOC 1' header");
      if (detail::doc_int(lineno, tokens[1]) != 1)
        doc_fail(lineno, "doc-parse", "unsupported format version '" + tokens[1] + "'");
      saw_header = true;
      continue;
    }

    if (tokens[0] == "INSTANCE") {
      if (saw_section) doc_fail(lineno, "doc-parse", "INSTANCE must precede the sections");
      if (doc.instance_declared) doc_fail(lineno, "doc-parse", "duplicate INSTANCE line");
      if (tokens.size() != 2 || (tokens[1] != "finset" && tokens[1] != "poset"))
        doc_fail(lineno, "doc-parse", "INSTANCE must be 'finset' or 'poset'");
      auto declared = tokens[1] == "finset" ? InstanceKind::finset : InstanceKind::poset;
      if (kind_override && *kind_override != declared)
        doc_fail(lineno, "instance-conflict",
                 "document declares instance '" + tokens[1] + "' but the command line asked for '" +
                     instance_name(*kind_override) + "'");
      doc.instance = declared;
      doc.instance_declared = true;
      continue;
    }

    if (tokens.size() == 1 &&
        (tokens[0] == "OBJECTS" || tokens[0] == "MORPHISMS" || tokens[0] == "CLASSES" ||
         tokens[0] == "COMMANDPARAMS")) {
      section = tokens[0] == "OBJECTS"     ? Section::objects
                : tokens[0] == "MORPHISMS" ? Section::morphisms
                : tokens[0] == "CLASSES"   ? Section::classes
                                           : Section::params;
      auto idx = static_cast<std::size_t>(section) - 1;
      if (seen_section[idx]) doc_fail(lineno, "doc-parse", "duplicate section " + tokens[0]);
      seen_section[idx] = 1;
      saw_section = true;
      continue;
    }

    switch (section) {
      case Section::none:
        doc_fail(lineno, "doc-parse", "content before any section header: '" + tokens[0] + "'");
      case Section::objects: {
        if (tokens.size() < 2) doc_fail(lineno, "doc-parse", "object line needs a name and a size");
        const auto& name = tokens[0];
        if (!detail::doc_identifier(name))
          doc_fail(lineno, "doc-parse", "invalid name '" + name + "'");
        if (doc.fin_objects.count(name) || doc.poset_objects.count(name))
          doc_fail(lineno, "doc-parse", "duplicate object name '" + name + "'");
        int size = detail::doc_int(lineno, tokens[1]);
        try {
          if (doc.instance == InstanceKind::finset) {
            if (tokens.size() != 2)
              doc_fail(lineno, "doc-parse", "finset object line is 'name size'");
            doc.fin_objects.emplace(name, FinObject{size});
          } else {
            std::vector<std::pair<int, int>> pairs;
            for (std::size_t i = 2; i < tokens.size(); ++i)
              pairs.push_back(detail::doc_relation_pair(lineno, tokens[i]));
            doc.poset_objects.emplace(name, make_poset(size, pairs));
          }
        } catch (const Error& e) {
          if (std::string(e.what()).rfind("line ", 0) == 0) throw;
          doc_fail(lineno, e.code(), e.what());
        }
        doc.object_names.push_back(name);
        break;
      }
      case Section::morphisms: {
        if (tokens.size() < 3)
          doc_fail(lineno, "doc-parse", "morphism line needs a name, dom and cod");
        const auto& name = tokens[0];
        if (!detail::doc_identifier(name))
          doc_fail(lineno, "doc-parse", "invalid name '" + name + "'");
        if (doc.fin_morphisms.count(name) || doc.poset_morphisms.count(name))
          doc_fail(lineno, "doc-parse", "duplicate morphism name '" + name + "'");
        std::vector<int> table;
        for (std::size_t i = 3; i < tokens.size(); ++i)
          table.push_back(detail::doc_int(lineno, tokens[i]));
        try {
          if (doc.instance == InstanceKind::finset) {
            auto dom = doc.fin_objects.find(tokens[1]);
            auto cod = doc.fin_objects.find(tokens[2]);
            if (dom == doc.fin_objects.end())
              doc_fail(lineno, "doc-name", "unknown object '" + tokens[1] + "'");
            if (cod == doc.fin_objects.end())
              doc_fail(lineno, "doc-name", "unknown object '" + tokens[2] + "'");
            doc.fin_morphisms.emplace(name,
                                      make_fin_morphism(dom->second, cod->second, std::move(table)));
          } else {
            auto dom = doc.poset_objects.find(tokens[1]);
            auto cod = doc.poset_objects.find(tokens[2]);
            if (dom == doc.poset_objects.end())
              doc_fail(lineno, "doc-name", "unknown object '" + tokens[1] + "'");
            if (cod == doc.poset_objects.end())
              doc_fail(lineno, "doc-name", "unknown object '" + tokens[2] + "'");
            doc.poset_morphisms.emplace(
                name, make_monotone(dom->second, cod->second, std::move(table)));
          }
        } catch (const Error& e) {
          if (std::string(e.what()).rfind("line ", 0) == 0) throw;
          doc_fail(lineno, e.code(), e.what());
        }
        doc.morphism_names.push_back(name);
        break;
      }
      case Section::classes: {
        const auto& name = tokens[0];
        if (!detail::doc_identifier(name))
          doc_fail(lineno, "doc-parse", "invalid name '" + name + "'");
        if (doc.classes.count(name))
          doc_fail(lineno, "doc-parse", "duplicate class name '" + name + "'");
        doc.classes.emplace(name, std::vector<std::string>(tokens.begin() + 1, tokens.end()));
        doc.class_names.push_back(name);
        class_lines.emplace_back(lineno, name);
        break;
      }
      case Section::params:
        doc.params.push_back(ParamRow{lineno, tokens});
        break;
    }
  }

  if (!saw_header) fail("doc-parse", "line 1: empty document, expected 'THCDOC 1' header");

  for (const auto& [line, name] : class_lines)
    for (const auto& member : doc.classes.at(name))
      if (!doc.fin_morphisms.count(member) && !doc.poset_morphisms.count(member))
        doc_fail(line, "doc-name",
                 "class '" + name + "' references unknown morphism '" + member + "'");

  return doc;
}

// Kind-directed accessors so commands can be written once.
template <class C>
struct DocAccess;

template <>
struct DocAccess<FinSetCat> {
  static const std::map<std::string, FinObject>& objects(const Document& d) {
    return d.fin_objects;
  }
  static const std::map<std::string, FinMorphism>& morphisms(const Document& d) {
    return d.fin_morphisms;
  }
};

template <>
struct DocAccess<PosetCat> {
  static const std::map<std::string, PosetObject>& objects(const Document& d) {
    return d.poset_objects;
  }
  static const std::map<std::string, MonotoneMap>& morphisms(const Document& d) {
    return d.poset_morphisms;
  }
};

template <class C>
const typename C::Morphism& doc_morphism(const Document& doc, const std::string& name) {
  const auto& table = DocAccess<C>::morphisms(doc);
  auto it = table.find(name);
  if (it == table.end()) fail("doc-name", "unknown morphism '" + name + "'");
  return it->second;
}

}  // namespace thc
