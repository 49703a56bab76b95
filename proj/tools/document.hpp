#pragma once

#include "supvar/lie.hpp"
#include "supvar/module.hpp"
#include "supvar/varieties.hpp"

#include <json.hpp>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace supvar::cli {

// malformed input; maps to exit code 2
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Document {
    Field field = Field::prime(3);
    std::optional<LieSuperalgebra> algebra;
    std::map<std::string, Supermodule> modules;
    std::vector<Matrix> group_on_v;
    std::map<std::string, std::vector<Matrix>> group_on_m;  // per module
    std::vector<Vector> test_vectors;
};

Field parse_field(const std::string& text);
Scalar parse_scalar(const Field& f, const nlohmann::json& j);
Matrix parse_matrix(const Field& f, const nlohmann::json& j);

// "gl:1:1", "odd_abelian:2", "ex_5_3_3:1:1:2", ...
LieSuperalgebra builder_algebra(const std::string& spec, const Field& f);
Supermodule named_module(const LieSuperalgebra& g, const std::string& name);

Document parse_document(const nlohmann::json& j, std::optional<Field> field_override);
Document load_document(const std::string& path, std::optional<Field> field_override);

}  // namespace supvar::cli
