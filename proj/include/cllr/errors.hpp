#ifndef CLLR_ERRORS_HPP
#define CLLR_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace cllr {

/// Byte offsets [start, end) into the parsed text.
struct SourceSpan {
  std::size_t start = 0;
  std::size_t end = 0;
};

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
  ParseError(SourceSpan span, std::string message, std::vector<std::string> expected = {})
      : Error(message.empty() ? std::string("parse error") : message), span_(span),
        expected_(std::move(expected)) {}

  const SourceSpan &span() const { return span_; }
  const std::vector<std::string> &expected() const { return expected_; }

private:
  SourceSpan span_;
  std::vector<std::string> expected_;
};

class GuardednessError : public Error {
public:
  GuardednessError(std::string variable, std::string equation, SourceSpan span = {})
      : Error("variable " + variable + " occurs unguarded in the equation for " + equation),
        variable_(std::move(variable)), equation_(std::move(equation)), span_(span) {}

  const std::string &variable() const { return variable_; }
  const std::string &equation() const { return equation_; }
  const SourceSpan &span() const { return span_; }

private:
  std::string variable_;
  std::string equation_;
  SourceSpan span_;
};

class UnboundRecVar : public Error {
public:
  UnboundRecVar(std::string variable, SourceSpan span)
      : Error("recursion variable " + variable + " has no equation in its specification"),
        variable_(std::move(variable)), span_(span) {}

  const std::string &variable() const { return variable_; }
  const SourceSpan &span() const { return span_; }

private:
  std::string variable_;
  SourceSpan span_;
};

class StateBoundExceeded : public Error {
public:
  explicit StateBoundExceeded(std::size_t count)
      : Error("state bound exceeded (" + std::to_string(count) + " terms)"), count_(count) {}
  std::size_t count() const { return count_; }

private:
  std::size_t count_;
};

class UnfoldDepthExceeded : public Error {
public:
  explicit UnfoldDepthExceeded(std::size_t depth)
      : Error("recursion unfolding exceeded depth " + std::to_string(depth)) {}
};

} // namespace cllr

#endif // CLLR_ERRORS_HPP
