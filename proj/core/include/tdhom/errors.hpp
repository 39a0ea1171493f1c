#pragma once

#include <stdexcept>
#include <string>

namespace tdhom {

// Malformed or inconsistent caller input (bad ids, palette mismatch, ...).
struct input_error : std::runtime_error {
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// Request exceeds a configured size bound (canonicalization, tuple grids).
struct capacity_error : std::runtime_error {
    explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

// Restriction of a tree order to a vertex set has no unique minimum.
struct not_a_subtree_error : input_error {
    explicit not_a_subtree_error(const std::string& what) : input_error(what) {}
};

// A checked internal identity failed; indicates a bug, never user input.
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

} // namespace tdhom
