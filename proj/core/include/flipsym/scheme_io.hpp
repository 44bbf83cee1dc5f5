#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <variant>

#include "flipsym/int_scheme.hpp"
#include "flipsym/scheme.hpp"

namespace flipsym {

// Text format, one scheme per file:
//
//   format scheme 1
//   n 2
//   field F2            (or Z)
//   group C3xZ2         (or C3, none)
//   partition {1,2}     (optional)
//   fixed 9 9 9
//   orbit 1 a c
//
// F2 factors are the lowercase hex of the packed n^2-bit row-major word;
// Z factors are n^2 comma-separated signed decimal integers, row-major.
// parse(render(s)) reproduces s exactly, including line order.

class SchemeIoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Field { F2, Z };

using AnyScheme = std::variant<Scheme, IntScheme>;

std::string render(const Scheme& s);
std::string render(const IntScheme& s);
std::string render(const AnyScheme& s);

AnyScheme parse_scheme(std::istream& in);
AnyScheme parse_scheme_text(const std::string& text);

AnyScheme load_scheme(const std::filesystem::path& path);
void save_scheme(const std::filesystem::path& path, const AnyScheme& s);

inline Field field_of(const AnyScheme& s) {
    return std::holds_alternative<Scheme>(s) ? Field::F2 : Field::Z;
}
const char* field_name(Field f);
int rank_of(const AnyScheme& s);
int dim_of(const AnyScheme& s);
Group group_of(const AnyScheme& s);

// verify_f2 or verify_int, by payload.
bool verify_any(const AnyScheme& s);

}  // namespace flipsym
