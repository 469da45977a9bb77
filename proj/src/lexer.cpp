#include "impc/token.hpp"

#include <cctype>
#include <unordered_map>

namespace impc {

const char* tok_name(Tok t) {
  switch (t) {
    case Tok::Eof: return "end of input";
    case Tok::Ident: return "identifier";
    case Tok::IntLit: return "integer literal";
    case Tok::StrLit: return "string literal";
    case Tok::KwFn: return "'fn'";
    case Tok::KwLet: return "'let'";
    case Tok::KwMut: return "'mut'";
    case Tok::KwIf: return "'if'";
    case Tok::KwElse: return "'else'";
    case Tok::KwFor: return "'for'";
    case Tok::KwIn: return "'in'";
    case Tok::KwWith: return "'with'";
    case Tok::KwType: return "'type'";
    case Tok::KwStruct: return "'struct'";
    case Tok::KwTrue: return "'true'";
    case Tok::KwFalse: return "'false'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::LBracket: return "'['";
    case Tok::RBracket: return "']'";
    case Tok::Comma: return "','";
    case Tok::Semi: return "';'";
    case Tok::Colon: return "':'";
    case Tok::Dot: return "'.'";
    case Tok::Arrow: return "'->'";
    case Tok::Assign: return "'='";
    case Tok::PlusEq: return "'+='";
    case Tok::MinusEq: return "'-='";
    case Tok::StarEq: return "'*='";
    case Tok::SlashEq: return "'/='";
    case Tok::PlusPlus: return "'++'";
    case Tok::EqEq: return "'=='";
    case Tok::NotEq: return "'!='";
    case Tok::Lt: return "'<'";
    case Tok::Le: return "'<='";
    case Tok::Gt: return "'>'";
    case Tok::Ge: return "'>='";
    case Tok::Shl: return "'<<'";
    case Tok::Shr: return "'>>'";
    case Tok::Plus: return "'+'";
    case Tok::Minus: return "'-'";
    case Tok::Star: return "'*'";
    case Tok::Slash: return "'/'";
    case Tok::Percent: return "'%'";
    case Tok::Amp: return "'&'";
    case Tok::AmpAmp: return "'&&'";
    case Tok::Pipe: return "'|'";
    case Tok::PipePipe: return "'||'";
    case Tok::Caret: return "'^'";
    case Tok::Bang: return "'!'";
    case Tok::At: return "'@'";
    case Tok::Question: return "'?'";
    case Tok::Dollar: return "'$'";
  }
  return "?";
}

namespace {

const std::unordered_map<std::string, Tok>& keywords() {
  static const std::unordered_map<std::string, Tok> kw = {
      {"fn", Tok::KwFn},     {"let", Tok::KwLet},       {"mut", Tok::KwMut},
      {"if", Tok::KwIf},     {"else", Tok::KwElse},     {"for", Tok::KwFor},
      {"in", Tok::KwIn},     {"with", Tok::KwWith},     {"type", Tok::KwType},
      {"struct", Tok::KwStruct}, {"true", Tok::KwTrue}, {"false", Tok::KwFalse},
  };
  return kw;
}

struct Cursor {
  const std::string& src;
  const SourceMap& sm;
  int file;
  size_t pos = 0;
  int line = 1;
  int col = 1;

  bool eof() const { return pos >= src.size(); }
  char peek(size_t k = 0) const { return pos + k < src.size() ? src[pos + k] : '\0'; }
  Span span() const { return Span{file, line, col}; }

  char advance() {
    char c = src[pos++];
    if (c == '\n') {
      line++;
      col = 1;
    } else {
      col++;
    }
    return c;
  }

  [[noreturn]] void err(Span sp, const std::string& msg) const { fail_at(sm, sp, msg); }
};

}  // namespace

std::vector<Token> tokenize(const std::string& source, int file_id, const SourceMap& sm) {
  Cursor c{source, sm, file_id};
  std::vector<Token> out;

  auto push = [&](Tok k, Span sp, std::string text, int64_t v = 0) {
    Token t;
    t.kind = k;
    t.text = std::move(text);
    t.ival = v;
    t.span = sp;
    out.push_back(std::move(t));
  };

  while (!c.eof()) {
    char ch = c.peek();
    if (ch == ' ' || ch == '\t' || ch == '\r' || ch == '\n') {
      c.advance();
      continue;
    }
    if (ch == '/' && c.peek(1) == '/') {
      while (!c.eof() && c.peek() != '\n') c.advance();
      continue;
    }
    if (ch == '/' && c.peek(1) == '*') {
      Span open = c.span();
      c.advance();
      c.advance();
      int depth = 1;
      while (depth > 0) {
        if (c.eof()) c.err(open, "unterminated block comment");
        if (c.peek() == '/' && c.peek(1) == '*') {
          c.advance();
          c.advance();
          depth++;
        } else if (c.peek() == '*' && c.peek(1) == '/') {
          c.advance();
          c.advance();
          depth--;
        } else {
          c.advance();
        }
      }
      continue;
    }

    Span sp = c.span();

    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::string id;
      while (!c.eof() && (std::isalnum(static_cast<unsigned char>(c.peek())) || c.peek() == '_'))
        id += c.advance();
      auto it = keywords().find(id);
      push(it != keywords().end() ? it->second : Tok::Ident, sp, id);
      continue;
    }

    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::string lit;
      int64_t val = 0;
      if (ch == '0' && (c.peek(1) == 'x' || c.peek(1) == 'X')) {
        lit += c.advance();
        lit += c.advance();
        if (!std::isxdigit(static_cast<unsigned char>(c.peek())))
          c.err(sp, "expected hex digits after '0x'");
        while (std::isxdigit(static_cast<unsigned char>(c.peek()))) {
          char d = c.advance();
          lit += d;
          int v = std::isdigit(static_cast<unsigned char>(d)) ? d - '0'
                                                              : std::tolower(d) - 'a' + 10;
          val = val * 16 + v;
        }
      } else {
        while (std::isdigit(static_cast<unsigned char>(c.peek()))) {
          char d = c.advance();
          lit += d;
          val = val * 10 + (d - '0');
        }
      }
      push(Tok::IntLit, sp, lit, val);
      continue;
    }

    if (ch == '"') {
      c.advance();
      std::string s;
      while (true) {
        if (c.eof()) c.err(sp, "unterminated string literal");
        char d = c.advance();
        if (d == '"') break;
        if (d == '\n') c.err(sp, "unterminated string literal");
        s += d;
      }
      push(Tok::StrLit, sp, s);
      continue;
    }

    auto two = [&](char second) { return c.peek(1) == second; };
    switch (ch) {
      case '(': c.advance(); push(Tok::LParen, sp, "("); continue;
      case ')': c.advance(); push(Tok::RParen, sp, ")"); continue;
      case '{': c.advance(); push(Tok::LBrace, sp, "{"); continue;
      case '}': c.advance(); push(Tok::RBrace, sp, "}"); continue;
      case '[': c.advance(); push(Tok::LBracket, sp, "["); continue;
      case ']': c.advance(); push(Tok::RBracket, sp, "]"); continue;
      case ',': c.advance(); push(Tok::Comma, sp, ","); continue;
      case ';': c.advance(); push(Tok::Semi, sp, ";"); continue;
      case ':': c.advance(); push(Tok::Colon, sp, ":"); continue;
      case '.': c.advance(); push(Tok::Dot, sp, "."); continue;
      case '@': c.advance(); push(Tok::At, sp, "@"); continue;
      case '?': c.advance(); push(Tok::Question, sp, "?"); continue;
      case '$': c.advance(); push(Tok::Dollar, sp, "$"); continue;
      case '^': c.advance(); push(Tok::Caret, sp, "^"); continue;
      case '-':
        c.advance();
        if (c.peek() == '>') { c.advance(); push(Tok::Arrow, sp, "->"); }
        else if (c.peek() == '=') { c.advance(); push(Tok::MinusEq, sp, "-="); }
        else push(Tok::Minus, sp, "-");
        continue;
      case '+':
        c.advance();
        if (c.peek() == '+') { c.advance(); push(Tok::PlusPlus, sp, "++"); }
        else if (c.peek() == '=') { c.advance(); push(Tok::PlusEq, sp, "+="); }
        else push(Tok::Plus, sp, "+");
        continue;
      case '*':
        c.advance();
        if (c.peek() == '=') { c.advance(); push(Tok::StarEq, sp, "*="); }
        else push(Tok::Star, sp, "*");
        continue;
      case '/':
        c.advance();
        if (c.peek() == '=') { c.advance(); push(Tok::SlashEq, sp, "/="); }
        else push(Tok::Slash, sp, "/");
        continue;
      case '%': c.advance(); push(Tok::Percent, sp, "%"); continue;
      case '=':
        c.advance();
        if (c.peek() == '=') { c.advance(); push(Tok::EqEq, sp, "=="); }
        else push(Tok::Assign, sp, "=");
        continue;
      case '!':
        c.advance();
        if (c.peek() == '=') { c.advance(); push(Tok::NotEq, sp, "!="); }
        else push(Tok::Bang, sp, "!");
        continue;
      case '<':
        c.advance();
        if (c.peek() == '<') { c.advance(); push(Tok::Shl, sp, "<<"); }
        else if (c.peek() == '=') { c.advance(); push(Tok::Le, sp, "<="); }
        else push(Tok::Lt, sp, "<");
        continue;
      case '>':
        c.advance();
        if (c.peek() == '>') { c.advance(); push(Tok::Shr, sp, ">>"); }
        else if (c.peek() == '=') { c.advance(); push(Tok::Ge, sp, ">="); }
        else push(Tok::Gt, sp, ">");
        continue;
      case '&':
        c.advance();
        if (c.peek() == '&') { c.advance(); push(Tok::AmpAmp, sp, "&&"); }
        else push(Tok::Amp, sp, "&");
        continue;
      case '|':
        c.advance();
        if (c.peek() == '|') { c.advance(); push(Tok::PipePipe, sp, "||"); }
        else push(Tok::Pipe, sp, "|");
        continue;
      default:
        c.err(sp, std::string("unknown character '") + ch + "'");
    }
    (void)two;
  }

  push(Tok::Eof, c.span(), "");
  return out;
}

}  // namespace impc
