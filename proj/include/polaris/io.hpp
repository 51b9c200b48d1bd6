#pragma once
#include <cstdint>
#include <string>

#include "json.hpp"
#include "polaris/opposition.hpp"
#include "polaris/sweep.hpp"

namespace polaris {

using json = nlohmann::json;

// malformed input files
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json field_json(const Field& F);
Field field_from_json(const json& j);
json elem_json(const Field& F, Elem a);
Elem elem_from_json(const Field& F, const json& j);

json space_json(const ClassicalForm& form);
ClassicalForm space_from_json(const json& j);

struct MatrixFile {
    ClassicalForm form;
    SemilinearMap g;
};
json matrix_json(const ClassicalForm& form, const SemilinearMap& g);
MatrixFile matrix_from_json(const json& j);

json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

json diagram_json(const PolarSpace& P, const OppDiagramResult& r);
json census_json(const Census& c);
std::string census_csv(const Census& c);

std::uint64_t content_hash(const std::string& text);
std::string hex64(std::uint64_t v);

} // namespace polaris
