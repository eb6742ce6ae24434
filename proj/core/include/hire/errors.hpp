#pragma once

#include <stdexcept>
#include <string>

namespace hire {

struct OutOfBoundsError : std::runtime_error {
  explicit OutOfBoundsError(const std::string& what) : std::runtime_error(what) {}
};

struct GeometryMismatchError : std::runtime_error {
  explicit GeometryMismatchError(const std::string& what) : std::runtime_error(what) {}
};

struct EmptyFrontierSetError : std::runtime_error {
  EmptyFrontierSetError() : std::runtime_error("frontier set is empty") {}
};

struct EmptyRoadmapError : std::runtime_error {
  EmptyRoadmapError() : std::runtime_error("roadmap is empty") {}
};

struct DegenerateDirectionError : std::runtime_error {
  DegenerateDirectionError() : std::runtime_error("extension direction is degenerate") {}
};

struct UnknownNodeError : std::runtime_error {
  explicit UnknownNodeError(const std::string& what) : std::runtime_error(what) {}
};

struct DirtyNodeError : std::runtime_error {
  explicit DirtyNodeError(const std::string& what) : std::runtime_error(what) {}
};

struct PastEndError : std::runtime_error {
  explicit PastEndError(const std::string& what) : std::runtime_error(what) {}
};

struct ScenarioError : std::runtime_error {
  explicit ScenarioError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hire
