#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "impc/diag.hpp"

namespace impc {

enum class Tok {
  Eof,
  Ident,
  IntLit,
  StrLit,
  // keywords
  KwFn,
  KwLet,
  KwMut,
  KwIf,
  KwElse,
  KwFor,
  KwIn,
  KwWith,
  KwType,
  KwStruct,
  KwTrue,
  KwFalse,
  // punctuation / operators
  LParen,
  RParen,
  LBrace,
  RBrace,
  LBracket,
  RBracket,
  Comma,
  Semi,
  Colon,
  Dot,
  Arrow,     // ->
  Assign,    // =
  PlusEq,
  MinusEq,
  StarEq,
  SlashEq,
  PlusPlus,
  EqEq,
  NotEq,
  Lt,
  Le,
  Gt,
  Ge,
  Shl,
  Shr,
  Plus,
  Minus,
  Star,
  Slash,
  Percent,
  Amp,
  AmpAmp,
  Pipe,
  PipePipe,
  Caret,
  Bang,
  At,        // @  (filter sigil)
  Question,  // ?
  Dollar,    // $
};

struct Token {
  Tok kind = Tok::Eof;
  std::string text;   // exact source slice
  int64_t ival = 0;   // for IntLit
  Span span;
};

const char* tok_name(Tok t);

// Lexes UTF-8 source text. Comments (`//`, nesting `/* */`) are discarded.
// Throws CompileError with a span on unknown characters or unterminated
// comments/strings. The returned stream always ends with an Eof token.
std::vector<Token> tokenize(const std::string& source, int file_id, const SourceMap& sm);

}  // namespace impc
