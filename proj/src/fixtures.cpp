#include "bellforge/io.hpp"

namespace bellforge {

// Keep byte-identical with data/three_chsh.json.
const std::string& builtin_three_chsh_json() {
    static const std::string text = R"json({
  "name": "3-CHSH",
  "nx": 3,
  "ny": 4,
  "na": 3,
  "nb": 3,
  "dist": [
    0.08333333333333333,
    0.08333333333333333,
    0.08333333333333333,
    0.08333333333333333,
    0.08333333333333333,
    0.08333333333333333,
    0.08333333333333333,
    0.08333333333333333,
    0.08333333333333333,
    0.08333333333333333,
    0.08333333333333333,
    0.08333333333333333
  ],
  "score": [
    1.0,
    -1.0,
    -1.0,
    -1.0,
    1.0,
    -1.0,
    -1.0,
    -1.0,
    0.7071067811865476,
    1.0,
    -1.0,
    -1.0,
    -1.0,
    1.0,
    -1.0,
    -1.0,
    -1.0,
    0.7071067811865476,
    0.7071067811865476,
    -1.0,
    -1.0,
    -1.0,
    1.0,
    -1.0,
    -1.0,
    -1.0,
    1.0,
    0.7071067811865476,
    -1.0,
    -1.0,
    -1.0,
    1.0,
    -1.0,
    -1.0,
    -1.0,
    1.0,
    1.0,
    -1.0,
    -1.0,
    -1.0,
    1.0,
    -1.0,
    -1.0,
    -1.0,
    0.7071067811865476,
    -1.0,
    1.0,
    -1.0,
    1.0,
    -1.0,
    -1.0,
    -1.0,
    -1.0,
    0.7071067811865476,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.7071067811865476,
    -1.0,
    -1.0,
    -1.0,
    1.0,
    -1.0,
    -1.0,
    -1.0,
    1.0,
    0.7071067811865476,
    -1.0,
    -1.0,
    -1.0,
    -1.0,
    1.0,
    -1.0,
    1.0,
    -1.0
  ]
}
)json";
    return text;
}

}  // namespace bellforge
