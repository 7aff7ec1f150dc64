#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace subbeaver {

/// Malformed or truncated bit string. `offset` is the bit position where decoding failed.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t offset, const std::string& what)
        : std::runtime_error("parse error at bit " + std::to_string(offset) + ": " + what),
          offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// A programmatic budget did not produce a step allowance within its meta-fuel.
class BudgetNotTotal : public std::runtime_error {
public:
    explicit BudgetNotTotal(const std::string& w)
        : std::runtime_error("budget not total within meta-fuel on w=" + w), w_(w) {}

    const std::string& w() const noexcept { return w_; }

private:
    std::string w_;
};

/// Two records disagree for the same cache key.
class IntegrityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Cache file could not be read.
class LoadError : public std::runtime_error {
public:
    LoadError(std::size_t line, const std::string& what)
        : std::runtime_error("cache load error at line " + std::to_string(line) + ": " + what),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace subbeaver
