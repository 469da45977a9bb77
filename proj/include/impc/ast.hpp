#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "impc/diag.hpp"

namespace impc::ast {

// ---------------------------------------------------------------------------
// Filters: the @(expr) specialization annotations. `?name` tests whether the
// argument bound to a parameter is known at specialization time.
// ---------------------------------------------------------------------------

struct FilterExpr;
using FilterPtr = std::shared_ptr<FilterExpr>;

struct FilterExpr {
  enum class Kind { Bool, Param, And, Or, Not };
  Kind kind;
  bool bval = false;
  std::string param;
  FilterPtr lhs, rhs;
  Span span;

  static FilterPtr boolean(bool b, Span sp) {
    auto f = std::make_shared<FilterExpr>();
    f->kind = Kind::Bool;
    f->bval = b;
    f->span = sp;
    return f;
  }
  static FilterPtr parameter(std::string name, Span sp) {
    auto f = std::make_shared<FilterExpr>();
    f->kind = Kind::Param;
    f->param = std::move(name);
    f->span = sp;
    return f;
  }
  static FilterPtr node(Kind k, FilterPtr a, FilterPtr b, Span sp) {
    auto f = std::make_shared<FilterExpr>();
    f->kind = k;
    f->lhs = std::move(a);
    f->rhs = std::move(b);
    f->span = sp;
    return f;
  }
};

// ---------------------------------------------------------------------------
// Surface types
// ---------------------------------------------------------------------------

struct TypeRef;
using TypeRefPtr = std::shared_ptr<TypeRef>;

struct TypeRef {
  enum class Kind { Int, Bool, Unit, Named, Fn, SliceRef, Stream };
  Kind kind = Kind::Unit;
  std::string name;                 // Named
  std::vector<TypeRefPtr> params;   // Fn
  TypeRefPtr ret;                   // Fn
  TypeRefPtr elem;                  // SliceRef
  bool is_mut = false;              // SliceRef: &mut [T]
  Span span;
};

// ---------------------------------------------------------------------------
// Expressions
// ---------------------------------------------------------------------------

struct Expr;
using ExprPtr = std::shared_ptr<Expr>;

enum class BinOp {
  Mul, Div, Mod, Add, Sub, Shl, Shr,
  Lt, Le, Gt, Ge, Eq, Ne,
  BitAnd, BitXor, BitOr,
  LogAnd, LogOr,
};

enum class UnOp { Neg, Not };

struct Param {
  std::string name;
  TypeRefPtr type;  // may be null for lambda params
  Span span;
};

struct Expr {
  enum class Kind {
    IntLit, BoolLit, StrLit, UnitLit,
    Var,
    Let,        // statement-shaped: name/type?/init?, is_mut
    Assign,     // target op= value (op may be plain '=')
    PostIncr,   // target++ (value is the old value)
    Unary, Binary,
    Call,       // callee(args) -- also array/buffer indexing
    Lambda,     // |params| body, optional filter
    If,
    Record,     // TypeName { field: expr, ... }
    Field,      // expr.name
    ArrayLit,   // [e, e, ...]
    DynMark,    // $expr
    For,        // for v1,..,vn in call { body }
    With,       // with v1,..,vn in call { body }  (vars optional)
    Block,      // { stmts...; tail? }
  };

  Kind kind;
  Span span;

  int64_t ival = 0;      // IntLit
  bool bval = false;     // BoolLit
  std::string sval;      // StrLit, Var name, Let name, Field name, Record type name
  bool is_mut = false;   // Let
  TypeRefPtr type;       // Let annotation
  BinOp bop{};
  UnOp uop{};
  std::string assign_op;  // "=", "+=", "-=", "*=", "/="

  ExprPtr a, b, c;                    // generic children (cond/then/else etc.)
  std::vector<ExprPtr> elems;         // call args, block stmts, array elems
  ExprPtr tail;                       // block tail expression (may be null)
  std::vector<Param> params;          // lambda params
  TypeRefPtr ret_type;                // lambda return annotation (may be null)
  FilterPtr filter;                   // lambda filter
  std::vector<std::string> names;     // for/with variables
  std::vector<std::pair<std::string, ExprPtr>> fields;  // record literal

  static ExprPtr make(Kind k, Span sp) {
    auto e = std::make_shared<Expr>();
    e->kind = k;
    e->span = sp;
    return e;
  }
};

// ---------------------------------------------------------------------------
// Items
// ---------------------------------------------------------------------------

struct FuncDecl {
  std::string name;
  FilterPtr filter;  // defaults to literal false when unannotated
  std::vector<Param> params;
  TypeRefPtr ret;
  ExprPtr body;  // null for bodyless declarations
  Span span;
};

struct StructDecl {
  std::string name;
  std::vector<std::pair<std::string, TypeRefPtr>> fields;
  Span span;
};

struct TypeAlias {
  std::string name;
  TypeRefPtr type;
  Span span;
};

struct Item {
  enum class Kind { Func, Struct, Alias };
  Kind kind;
  FuncDecl func;
  StructDecl strct;
  TypeAlias alias;
};

struct Program {
  std::vector<Item> items;
};

// Pretty-prints a program as parseable source text.
std::string print_program(const Program& p);
std::string print_expr(const Expr& e);

// Rewrites all `for`/`with` sugar into trailing-closure calls. Idempotent.
Program desugar(const Program& p);

}  // namespace impc::ast
