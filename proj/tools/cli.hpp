#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "json.hpp"
#include "stems/block_answer.hpp"
#include "stems/virtual_rep.hpp"

namespace stems::cli {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t pos, const std::string& msg)
        : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}

    std::size_t position;
};

// Grammar: expr := term (('+'|'-') term)*, with an optional sign before the
// first term; term := [uint '*']? irr; irr := z(n) | sigma(n) | delta |
// W(odd>=3) | V(even>=2) | h(odd). The literal "0" denotes the zero rep.
// Whitespace is insignificant. W/V arguments are dimension labels.
VirtualRep parse_rep(const std::string& text, Group g);

// "a..b" with optional signs, a <= b not required here.
std::pair<int, int> parse_degrees(const std::string& text);

nlohmann::json answer_to_json(const BlockAnswer& ans, int lo, int hi);
std::string render_table(const BlockAnswer& ans, int lo, int hi, bool blocks);

int main_entry(int argc, char** argv);

} // namespace stems::cli
