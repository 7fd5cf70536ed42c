#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace univoq {

struct BaseOutOfRange : std::domain_error {
    explicit BaseOutOfRange(const std::string& what) : std::domain_error(what) {}
};

struct UndecidedAtDepth : std::runtime_error {
    size_t depth;
    explicit UndecidedAtDepth(size_t d)
        : std::runtime_error("comparison undecided at depth " + std::to_string(d)), depth(d) {}
};

struct CapExceeded : std::runtime_error {
    size_t required;
    explicit CapExceeded(size_t req)
        : std::runtime_error("work cap exceeded, required " + std::to_string(req)),
          required(req) {}
};

struct EmptyGraph : std::runtime_error {
    EmptyGraph() : std::runtime_error("graph has no biinfinite walk") {}
};

struct DepthExceeded : std::runtime_error {
    explicit DepthExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct NotAdmissible : std::invalid_argument {
    explicit NotAdmissible(const std::string& what) : std::invalid_argument(what) {}
};

struct DegenerateBoundary : std::domain_error {
    explicit DegenerateBoundary(const std::string& what) : std::domain_error(what) {}
};

struct CertificateDepthExceeded : std::runtime_error {
    explicit CertificateDepthExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct InternalConsistencyAlarm : std::logic_error {
    explicit InternalConsistencyAlarm(const std::string& what) : std::logic_error(what) {}
};

}  // namespace univoq
