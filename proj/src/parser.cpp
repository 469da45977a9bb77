#include "impc/parser.hpp"

#include <initializer_list>

namespace impc {

using namespace ast;

namespace {

class Parser {
 public:
  Parser(const std::vector<Token>& toks, const SourceMap& sm) : toks_(toks), sm_(sm) {}

  Program program() {
    Program p;
    while (!at(Tok::Eof)) {
      if (at(Tok::KwType)) {
        p.items.push_back(type_alias());
      } else if (at(Tok::KwStruct)) {
        p.items.push_back(struct_decl());
      } else if (at(Tok::KwFn)) {
        p.items.push_back(func_decl());
      } else {
        err({Tok::KwFn, Tok::KwStruct, Tok::KwType});
      }
    }
    return p;
  }

 private:
  const std::vector<Token>& toks_;
  const SourceMap& sm_;
  size_t pos_ = 0;
  bool no_struct_lit_ = false;

  const Token& cur() const { return toks_[pos_]; }
  const Token& peek(size_t k = 1) const {
    size_t i = pos_ + k;
    return i < toks_.size() ? toks_[i] : toks_.back();
  }
  bool at(Tok k) const { return cur().kind == k; }
  Token advance() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

  bool accept(Tok k) {
    if (!at(k)) return false;
    advance();
    return true;
  }

  Token expect(Tok k) {
    if (!at(k)) err({k});
    return advance();
  }

  [[noreturn]] void err(std::initializer_list<Tok> expected) {
    std::string msg = "unexpected " + std::string(tok_name(cur().kind));
    if (!cur().text.empty() && cur().kind != Tok::Eof) msg += " '" + cur().text + "'";
    if (expected.size() > 0) {
      msg += ", expected ";
      bool first = true;
      for (Tok t : expected) {
        if (!first) msg += " or ";
        msg += tok_name(t);
        first = false;
      }
    }
    fail_at(sm_, cur().span, msg);
  }

  // ---- items ----

  Item type_alias() {
    Item it;
    it.kind = Item::Kind::Alias;
    it.alias.span = cur().span;
    expect(Tok::KwType);
    it.alias.name = expect(Tok::Ident).text;
    expect(Tok::Assign);
    it.alias.type = type_ref();
    expect(Tok::Semi);
    return it;
  }

  Item struct_decl() {
    Item it;
    it.kind = Item::Kind::Struct;
    it.strct.span = cur().span;
    expect(Tok::KwStruct);
    it.strct.name = expect(Tok::Ident).text;
    expect(Tok::LBrace);
    while (!at(Tok::RBrace)) {
      std::string fname = expect(Tok::Ident).text;
      expect(Tok::Colon);
      it.strct.fields.emplace_back(fname, type_ref());
      if (!accept(Tok::Comma)) break;
    }
    expect(Tok::RBrace);
    return it;
  }

  Item func_decl() {
    Item it;
    it.kind = Item::Kind::Func;
    FuncDecl& f = it.func;
    f.span = cur().span;
    expect(Tok::KwFn);
    if (at(Tok::At)) f.filter = filter_annotation();
    else f.filter = FilterExpr::boolean(false, f.span);
    f.name = expect(Tok::Ident).text;
    expect(Tok::LParen);
    while (!at(Tok::RParen)) {
      Param p;
      p.span = cur().span;
      p.name = expect(Tok::Ident).text;
      expect(Tok::Colon);
      p.type = type_ref();
      f.params.push_back(std::move(p));
      if (!accept(Tok::Comma)) break;
    }
    expect(Tok::RParen);
    if (accept(Tok::Arrow)) {
      f.ret = type_ref();
    } else {
      f.ret = std::make_shared<TypeRef>();
      f.ret->kind = TypeRef::Kind::Unit;
    }
    if (accept(Tok::Semi)) {
      f.body = nullptr;  // declaration without body
    } else {
      f.body = block();
    }
    return it;
  }

  // ---- filters ----

  FilterPtr filter_annotation() {
    Span sp = cur().span;
    expect(Tok::At);
    if (at(Tok::LParen)) {
      advance();
      FilterPtr f = filter_or();
      expect(Tok::RParen);
      return f;
    }
    return FilterExpr::boolean(true, sp);  // bare @ stores literal true
  }

  FilterPtr filter_or() {
    FilterPtr l = filter_and();
    while (at(Tok::Pipe)) {
      Span sp = advance().span;
      l = FilterExpr::node(FilterExpr::Kind::Or, l, filter_and(), sp);
    }
    return l;
  }

  FilterPtr filter_and() {
    FilterPtr l = filter_prim();
    while (at(Tok::Amp)) {
      Span sp = advance().span;
      l = FilterExpr::node(FilterExpr::Kind::And, l, filter_prim(), sp);
    }
    return l;
  }

  FilterPtr filter_prim() {
    Span sp = cur().span;
    if (accept(Tok::Bang))
      return FilterExpr::node(FilterExpr::Kind::Not, filter_prim(), nullptr, sp);
    if (accept(Tok::KwTrue)) return FilterExpr::boolean(true, sp);
    if (accept(Tok::KwFalse)) return FilterExpr::boolean(false, sp);
    if (accept(Tok::Question)) return FilterExpr::parameter(expect(Tok::Ident).text, sp);
    if (accept(Tok::LParen)) {
      FilterPtr f = filter_or();
      expect(Tok::RParen);
      return f;
    }
    err({Tok::KwTrue, Tok::KwFalse, Tok::Question, Tok::Bang, Tok::LParen});
  }

  // ---- types ----

  TypeRefPtr type_ref() {
    auto t = std::make_shared<TypeRef>();
    t->span = cur().span;
    if (at(Tok::LParen)) {
      advance();
      expect(Tok::RParen);
      t->kind = TypeRef::Kind::Unit;
      return t;
    }
    if (at(Tok::KwFn)) {
      advance();
      t->kind = TypeRef::Kind::Fn;
      expect(Tok::LParen);
      while (!at(Tok::RParen)) {
        t->params.push_back(type_ref());
        if (!accept(Tok::Comma)) break;
      }
      expect(Tok::RParen);
      expect(Tok::Arrow);
      t->ret = type_ref();
      return t;
    }
    if (at(Tok::Amp)) {
      advance();
      t->kind = TypeRef::Kind::SliceRef;
      t->is_mut = accept(Tok::KwMut);
      expect(Tok::LBracket);
      t->elem = type_ref();
      expect(Tok::RBracket);
      return t;
    }
    std::string name = expect(Tok::Ident).text;
    if (name == "int") t->kind = TypeRef::Kind::Int;
    else if (name == "bool") t->kind = TypeRef::Kind::Bool;
    else if (name == "stream") t->kind = TypeRef::Kind::Stream;
    else {
      t->kind = TypeRef::Kind::Named;
      t->name = name;
    }
    return t;
  }

  // ---- statements / blocks ----

  ExprPtr block() {
    Span sp = cur().span;
    expect(Tok::LBrace);
    bool saved = no_struct_lit_;
    no_struct_lit_ = false;
    auto blk = Expr::make(Expr::Kind::Block, sp);
    while (!at(Tok::RBrace)) {
      if (at(Tok::KwLet)) {
        let_stmt(blk->elems);
        continue;
      }
      ExprPtr e = expr();
      if (at(Tok::RBrace)) {
        blk->tail = e;
        break;
      }
      bool blockish = e->kind == Expr::Kind::If || e->kind == Expr::Kind::For ||
                      e->kind == Expr::Kind::With || e->kind == Expr::Kind::Block;
      if (blockish) {
        accept(Tok::Semi);
        blk->elems.push_back(e);
      } else {
        expect(Tok::Semi);
        blk->elems.push_back(e);
      }
    }
    expect(Tok::RBrace);
    no_struct_lit_ = saved;
    return blk;
  }

  void let_stmt(std::vector<ExprPtr>& out) {
    Span sp = cur().span;
    expect(Tok::KwLet);
    bool is_mut = accept(Tok::KwMut);
    if (accept(Tok::LParen)) {
      // destructuring let: `let mut (a, b) = (e1, e2);` splits into one let
      // per name, evaluated left to right
      std::vector<std::string> names;
      names.push_back(expect(Tok::Ident).text);
      while (accept(Tok::Comma)) names.push_back(expect(Tok::Ident).text);
      expect(Tok::RParen);
      expect(Tok::Assign);
      expect(Tok::LParen);
      std::vector<ExprPtr> inits;
      inits.push_back(expr());
      while (accept(Tok::Comma)) inits.push_back(expr());
      expect(Tok::RParen);
      expect(Tok::Semi);
      if (names.size() != inits.size())
        fail_at(sm_, sp, "destructuring let arity mismatch");
      for (size_t i = 0; i < names.size(); ++i) {
        auto let = Expr::make(Expr::Kind::Let, sp);
        let->sval = names[i];
        let->is_mut = is_mut;
        let->a = inits[i];
        out.push_back(let);
      }
      return;
    }
    auto let = Expr::make(Expr::Kind::Let, sp);
    let->is_mut = is_mut;
    let->sval = expect(Tok::Ident).text;
    if (accept(Tok::Colon)) let->type = type_ref();
    if (accept(Tok::Assign)) let->a = expr();
    if (!let->a && !let->type)
      fail_at(sm_, sp, "let binding needs a type annotation or an initializer");
    expect(Tok::Semi);
    out.push_back(let);
  }

  // ---- expressions ----

  ExprPtr expr() {
    ExprPtr lhs = logical_or();
    if (at(Tok::Assign) || at(Tok::PlusEq) || at(Tok::MinusEq) || at(Tok::StarEq) ||
        at(Tok::SlashEq)) {
      Token op = advance();
      if (lhs->kind != Expr::Kind::Var && lhs->kind != Expr::Kind::Call &&
          lhs->kind != Expr::Kind::Field)
        fail_at(sm_, op.span, "invalid assignment target");
      auto e = Expr::make(Expr::Kind::Assign, op.span);
      e->assign_op = op.text;
      e->a = lhs;
      e->b = expr();  // right-associative
      return e;
    }
    return lhs;
  }

  ExprPtr binary_chain(ExprPtr (Parser::*next)(), std::initializer_list<std::pair<Tok, BinOp>> ops) {
    ExprPtr l = (this->*next)();
    for (;;) {
      bool matched = false;
      for (auto [tk, bo] : ops) {
        if (at(tk)) {
          Span sp = advance().span;
          auto e = Expr::make(Expr::Kind::Binary, sp);
          e->bop = bo;
          e->a = l;
          e->b = (this->*next)();
          l = e;
          matched = true;
          break;
        }
      }
      if (!matched) return l;
    }
  }

  ExprPtr logical_or() { return binary_chain(&Parser::logical_and, {{Tok::PipePipe, BinOp::LogOr}}); }
  ExprPtr logical_and() { return binary_chain(&Parser::bit_or, {{Tok::AmpAmp, BinOp::LogAnd}}); }
  ExprPtr bit_or() { return binary_chain(&Parser::bit_xor, {{Tok::Pipe, BinOp::BitOr}}); }
  ExprPtr bit_xor() { return binary_chain(&Parser::bit_and, {{Tok::Caret, BinOp::BitXor}}); }
  ExprPtr bit_and() { return binary_chain(&Parser::comparison, {{Tok::Amp, BinOp::BitAnd}}); }
  ExprPtr comparison() {
    return binary_chain(&Parser::shift, {{Tok::Lt, BinOp::Lt},
                                         {Tok::Le, BinOp::Le},
                                         {Tok::Gt, BinOp::Gt},
                                         {Tok::Ge, BinOp::Ge},
                                         {Tok::EqEq, BinOp::Eq},
                                         {Tok::NotEq, BinOp::Ne}});
  }
  ExprPtr shift() {
    return binary_chain(&Parser::additive, {{Tok::Shl, BinOp::Shl}, {Tok::Shr, BinOp::Shr}});
  }
  ExprPtr additive() {
    return binary_chain(&Parser::multiplicative,
                        {{Tok::Plus, BinOp::Add}, {Tok::Minus, BinOp::Sub}});
  }
  ExprPtr multiplicative() {
    return binary_chain(&Parser::unary, {{Tok::Star, BinOp::Mul},
                                         {Tok::Slash, BinOp::Div},
                                         {Tok::Percent, BinOp::Mod}});
  }

  ExprPtr unary() {
    Span sp = cur().span;
    if (accept(Tok::Minus)) {
      auto e = Expr::make(Expr::Kind::Unary, sp);
      e->uop = UnOp::Neg;
      e->a = unary();
      return e;
    }
    if (accept(Tok::Bang)) {
      auto e = Expr::make(Expr::Kind::Unary, sp);
      e->uop = UnOp::Not;
      e->a = unary();
      return e;
    }
    if (accept(Tok::Dollar)) {
      auto e = Expr::make(Expr::Kind::DynMark, sp);
      e->a = unary();
      return e;
    }
    return postfix();
  }

  ExprPtr postfix() {
    ExprPtr e = primary();
    for (;;) {
      if (at(Tok::LParen)) {
        Span sp = advance().span;
        auto call = Expr::make(Expr::Kind::Call, sp);
        call->a = e;
        bool saved = no_struct_lit_;
        no_struct_lit_ = false;
        while (!at(Tok::RParen)) {
          call->elems.push_back(expr());
          if (!accept(Tok::Comma)) break;
        }
        no_struct_lit_ = saved;
        expect(Tok::RParen);
        e = call;
      } else if (at(Tok::Dot)) {
        Span sp = advance().span;
        auto fld = Expr::make(Expr::Kind::Field, sp);
        fld->a = e;
        fld->sval = expect(Tok::Ident).text;
        e = fld;
      } else if (at(Tok::PlusPlus)) {
        Span sp = advance().span;
        if (e->kind != Expr::Kind::Var && e->kind != Expr::Kind::Call &&
            e->kind != Expr::Kind::Field)
          fail_at(sm_, sp, "invalid '++' target");
        auto inc = Expr::make(Expr::Kind::PostIncr, sp);
        inc->a = e;
        e = inc;
      } else {
        return e;
      }
    }
  }

  ExprPtr lambda(FilterPtr filter, Span sp) {
    auto e = Expr::make(Expr::Kind::Lambda, sp);
    e->filter = std::move(filter);
    if (accept(Tok::PipePipe)) {
      // zero parameters
    } else {
      expect(Tok::Pipe);
      while (!at(Tok::Pipe)) {
        Param p;
        p.span = cur().span;
        p.name = expect(Tok::Ident).text;
        if (accept(Tok::Colon)) p.type = type_ref();
        e->params.push_back(std::move(p));
        if (!accept(Tok::Comma)) break;
      }
      expect(Tok::Pipe);
    }
    bool saved = no_struct_lit_;
    no_struct_lit_ = false;
    e->a = at(Tok::LBrace) ? block() : expr();
    no_struct_lit_ = saved;
    return e;
  }

  ExprPtr if_expr() {
    Span sp = expect(Tok::KwIf).span;
    auto e = Expr::make(Expr::Kind::If, sp);
    bool saved = no_struct_lit_;
    no_struct_lit_ = true;
    e->a = expr();
    no_struct_lit_ = saved;
    e->b = block();
    if (accept(Tok::KwElse)) {
      if (at(Tok::KwIf)) e->c = if_expr();
      else e->c = block();
    }
    return e;
  }

  ExprPtr for_expr() {
    Span sp = expect(Tok::KwFor).span;
    auto e = Expr::make(Expr::Kind::For, sp);
    e->names.push_back(expect(Tok::Ident).text);
    while (accept(Tok::Comma)) e->names.push_back(expect(Tok::Ident).text);
    expect(Tok::KwIn);
    bool saved = no_struct_lit_;
    no_struct_lit_ = true;
    e->a = expr();
    no_struct_lit_ = saved;
    if (e->a->kind != Expr::Kind::Call)
      fail_at(sm_, e->a->span, "'for' iterates a generator call");
    e->b = block();
    return e;
  }

  ExprPtr with_expr() {
    Span sp = expect(Tok::KwWith).span;
    auto e = Expr::make(Expr::Kind::With, sp);
    // optional `v1, ..., vn in` prefix
    size_t save_pos = pos_;
    if (at(Tok::Ident)) {
      std::vector<std::string> names;
      names.push_back(advance().text);
      while (accept(Tok::Comma)) {
        if (!at(Tok::Ident)) { names.clear(); break; }
        names.push_back(advance().text);
      }
      if (!names.empty() && accept(Tok::KwIn)) {
        e->names = std::move(names);
      } else {
        pos_ = save_pos;
      }
    }
    bool saved = no_struct_lit_;
    no_struct_lit_ = true;
    e->a = expr();
    no_struct_lit_ = saved;
    if (e->a->kind != Expr::Kind::Call)
      fail_at(sm_, e->a->span, "'with' expects a call");
    e->b = block();
    return e;
  }

  ExprPtr primary() {
    Span sp = cur().span;
    switch (cur().kind) {
      case Tok::IntLit: {
        Token t = advance();
        auto e = Expr::make(Expr::Kind::IntLit, sp);
        e->ival = t.ival;
        e->sval = t.text;
        return e;
      }
      case Tok::KwTrue:
      case Tok::KwFalse: {
        Token t = advance();
        auto e = Expr::make(Expr::Kind::BoolLit, sp);
        e->bval = t.kind == Tok::KwTrue;
        return e;
      }
      case Tok::StrLit: {
        Token t = advance();
        auto e = Expr::make(Expr::Kind::StrLit, sp);
        e->sval = t.text;
        return e;
      }
      case Tok::Ident: {
        Token t = advance();
        if (at(Tok::LBrace) && !no_struct_lit_) {
          // record literal
          advance();
          auto e = Expr::make(Expr::Kind::Record, sp);
          e->sval = t.text;
          while (!at(Tok::RBrace)) {
            std::string fname = expect(Tok::Ident).text;
            expect(Tok::Colon);
            e->fields.emplace_back(fname, expr());
            if (!accept(Tok::Comma)) break;
          }
          expect(Tok::RBrace);
          return e;
        }
        auto e = Expr::make(Expr::Kind::Var, sp);
        e->sval = t.text;
        return e;
      }
      case Tok::LParen: {
        advance();
        if (accept(Tok::RParen)) return Expr::make(Expr::Kind::UnitLit, sp);
        bool saved = no_struct_lit_;
        no_struct_lit_ = false;
        ExprPtr e = expr();
        if (at(Tok::Comma))
          fail_at(sm_, cur().span, "tuple expressions are only allowed in destructuring let");
        no_struct_lit_ = saved;
        expect(Tok::RParen);
        return e;
      }
      case Tok::LBracket: {
        advance();
        auto e = Expr::make(Expr::Kind::ArrayLit, sp);
        bool saved = no_struct_lit_;
        no_struct_lit_ = false;
        while (!at(Tok::RBracket)) {
          e->elems.push_back(expr());
          if (!accept(Tok::Comma)) break;
        }
        no_struct_lit_ = saved;
        expect(Tok::RBracket);
        return e;
      }
      case Tok::LBrace:
        return block();
      case Tok::KwIf:
        return if_expr();
      case Tok::KwFor:
        return for_expr();
      case Tok::KwWith:
        return with_expr();
      case Tok::Pipe:
      case Tok::PipePipe:
        return lambda(nullptr, sp);
      case Tok::At: {
        FilterPtr f = filter_annotation();
        if (!at(Tok::Pipe) && !at(Tok::PipePipe)) err({Tok::Pipe, Tok::PipePipe});
        return lambda(f, sp);
      }
      default:
        err({Tok::Ident, Tok::IntLit, Tok::LParen, Tok::KwIf, Tok::Pipe});
    }
  }
};

}  // namespace

ast::Program parse(const std::vector<Token>& tokens, const SourceMap& sm) {
  Parser p(tokens, sm);
  return p.program();
}

ast::Program parse_source(const std::string& text, int file_id, const SourceMap& sm) {
  return parse(tokenize(text, file_id, sm), sm);
}

}  // namespace impc
