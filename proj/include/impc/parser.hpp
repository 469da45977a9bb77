#pragma once

#include "impc/ast.hpp"
#include "impc/token.hpp"

namespace impc {

// Parses one compilation unit. Throws CompileError with a span and the
// expected token set on malformed input.
ast::Program parse(const std::vector<Token>& tokens, const SourceMap& sm);

// Convenience: tokenize + parse.
ast::Program parse_source(const std::string& text, int file_id, const SourceMap& sm);

}  // namespace impc
