#pragma once

#include <stdexcept>
#include <string>

namespace gieseker {

/// Malformed textual input (partition, rational, cocharacter, antichain).
class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Input outside the range where a classification result applies. Carries the
/// hypothesis that was violated so front ends can report it verbatim.
class HypothesisError : public std::domain_error {
public:
    HypothesisError(std::string hypothesis, std::string anchor)
        : std::domain_error(hypothesis + " [" + anchor + "]"),
          hypothesis_(std::move(hypothesis)),
          anchor_(std::move(anchor)) {}

    const std::string& hypothesis() const noexcept { return hypothesis_; }
    const std::string& anchor() const noexcept { return anchor_; }

private:
    std::string hypothesis_;
    std::string anchor_;
};

}  // namespace gieseker
