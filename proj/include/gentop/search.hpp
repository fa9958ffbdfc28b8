#pragma once

#include <optional>
#include <string>

#include "gentop/generate.hpp"
#include "gentop/json_io.hpp"

namespace gentop {

enum class FrameClass { Gtf, GtfConsistent, Strong, Gtff, Gtfi };

std::optional<FrameClass> frame_class_from_name(const std::string& name);
std::string frame_class_name(FrameClass c);

struct Countermodel {
  ModelFile model;
  FormulaPtr instance;
  int world = -1;
  long iteration = -1;  // -1 for hits in the exhaustive sweep
};

// Looks for a model of the class in which some instance of the schema
// fails: first an exhaustive sweep over small models (up to three
// worlds, bounded families), then seeded random generation up to the
// iteration budget. Deterministic for a fixed config.
std::optional<Countermodel> search_countermodel(SchemaId schema,
                                                FrameClass frame_class,
                                                const SearchConfig& cfg);

}  // namespace gentop
