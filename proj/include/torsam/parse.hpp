#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "torsam/module.hpp"

namespace torsam {

class InputError : public Error {
 public:
  InputError(const std::string& msg, int line, int column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg), line_(line), column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_, column_;
};

// polynomial in the variables of P; `*` optional, `^` for powers,
// variable names matched longest-first
Poly parse_poly(const PolyRing* P, const std::string& text);

struct NamedRing {
  std::string name;
  RingPtr ring;
};

struct NamedModule {
  std::string name;
  std::string ring_name;
  ModulePresentation module;
};

struct Document {
  PrimeField field;
  std::vector<NamedRing> rings;
  std::vector<NamedModule> modules;

  RingPtr ring(const std::string& name) const;
  const ModulePresentation& module(const std::string& name) const;
};

// default_field is used until a `field` line appears
Document parse_document(const std::string& text, PrimeField default_field = PrimeField());

std::string ring_to_text(const std::string& name, const GradedRing& R);
std::string module_to_text(const std::string& name, const std::string& ring_name, const ModulePresentation& M);

// one-off helpers for code and tests
RingPtr make_ring(const std::string& vars, const std::string& relations = "", PrimeField f = PrimeField());
ModulePresentation make_module(const RingPtr& R, const std::vector<int>& degrees,
                               const std::vector<std::vector<std::string>>& rows);

}  // namespace torsam
