#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <variant>

#include <apnae/instances.hpp>

namespace apnae {

/// Line-oriented instance text format:
///
///   c free-form comment
///   p apnae <n> <k> <m>      followed by m lines  <a> <x> <s1s2...sk>
///   p aphg  <n> <k> <m>      followed by m lines  <a> <x>
///
/// Signs are a 0/1 string, one character per literal. Headers with non-prime
/// n or k >= n are rejected, as are out-of-range residues and body/header
/// count mismatches.

class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

using Instance = std::variant<Formula, ApHypergraph>;

void write_instance(std::ostream& out, const Formula& f);
void write_instance(std::ostream& out, const ApHypergraph& h);

Instance read_instance(std::istream& in);
Instance read_instance_file(const std::string& path);

} // namespace apnae
