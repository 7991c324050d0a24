#pragma once

#include "dwfs/core.h"
#include "dwfs/error.h"

#include <string>
#include <string_view>

namespace dwfs {

struct SourceSpan {
    int line = 1;
    int column = 1;
};

class ParseError : public Error {
public:
    ParseError(SourceSpan at, const std::string& message);
    SourceSpan span() const noexcept { return span_; }
    // Message without the "line:col: " prefix.
    const std::string& detail() const noexcept { return detail_; }

private:
    SourceSpan span_;
    std::string detail_;
};

// rule    := head ( ":-" body )? "."
// head    := atom ( "|" atom )*
// body    := literal ( "," literal )*
// literal := atom | "not" atom
// atom    := [a-zA-Z_][a-zA-Z0-9_]*
// '%' starts a comment running to the end of the line.
Program parse_program(std::string_view text);

// Rules one per line, atoms and lines ordered by name, so the text does not
// depend on interning order.  Re-parses to an equal program.
std::string render_program(const Program& p);
std::string render_rule(const Program& p, const Rule& r);
std::string render_disjunction(const Program& p, const AtomSet& d);

// One line per positive disjunction of the core, then one "not x" line per
// false atom, ordered by name.
std::string render_state(const Program& p, const ModelState& s);

} // namespace dwfs
