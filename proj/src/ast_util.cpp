#include <sstream>

#include "impc/ast.hpp"

namespace impc::ast {

namespace {

// Printing precedence levels; higher binds tighter.
int binop_level(BinOp op) {
  switch (op) {
    case BinOp::Mul: case BinOp::Div: case BinOp::Mod: return 10;
    case BinOp::Add: case BinOp::Sub: return 9;
    case BinOp::Shl: case BinOp::Shr: return 8;
    case BinOp::Lt: case BinOp::Le: case BinOp::Gt: case BinOp::Ge:
    case BinOp::Eq: case BinOp::Ne: return 7;
    case BinOp::BitAnd: return 6;
    case BinOp::BitXor: return 5;
    case BinOp::BitOr: return 4;
    case BinOp::LogAnd: return 3;
    case BinOp::LogOr: return 2;
  }
  return 0;
}

const char* binop_text(BinOp op) {
  switch (op) {
    case BinOp::Mul: return "*";
    case BinOp::Div: return "/";
    case BinOp::Mod: return "%";
    case BinOp::Add: return "+";
    case BinOp::Sub: return "-";
    case BinOp::Shl: return "<<";
    case BinOp::Shr: return ">>";
    case BinOp::Lt: return "<";
    case BinOp::Le: return "<=";
    case BinOp::Gt: return ">";
    case BinOp::Ge: return ">=";
    case BinOp::Eq: return "==";
    case BinOp::Ne: return "!=";
    case BinOp::BitAnd: return "&";
    case BinOp::BitXor: return "^";
    case BinOp::BitOr: return "|";
    case BinOp::LogAnd: return "&&";
    case BinOp::LogOr: return "||";
  }
  return "?";
}

class Printer {
 public:
  std::string run(const Program& p) {
    for (const Item& it : p.items) {
      switch (it.kind) {
        case Item::Kind::Alias:
          os_ << "type " << it.alias.name << " = ";
          type(*it.alias.type);
          os_ << ";\n";
          break;
        case Item::Kind::Struct:
          os_ << "struct " << it.strct.name << " {\n";
          for (size_t i = 0; i < it.strct.fields.size(); ++i) {
            os_ << "  " << it.strct.fields[i].first << ": ";
            type(*it.strct.fields[i].second);
            os_ << (i + 1 < it.strct.fields.size() ? ",\n" : "\n");
          }
          os_ << "}\n";
          break;
        case Item::Kind::Func: {
          const FuncDecl& f = it.func;
          os_ << "fn ";
          filter(f.filter);
          os_ << f.name << "(";
          for (size_t i = 0; i < f.params.size(); ++i) {
            if (i) os_ << ", ";
            os_ << f.params[i].name << ": ";
            type(*f.params[i].type);
          }
          os_ << ") -> ";
          type(*f.ret);
          if (!f.body) {
            os_ << ";\n";
          } else {
            os_ << " ";
            expr(*f.body, 0);
            os_ << "\n";
          }
          break;
        }
      }
    }
    return os_.str();
  }

  std::string run_expr(const Expr& e) {
    expr(e, 0);
    return os_.str();
  }

 private:
  std::ostringstream os_;
  int indent_ = 0;

  void nl() {
    os_ << "\n";
    for (int i = 0; i < indent_; ++i) os_ << "  ";
  }

  void filter(const FilterPtr& f) {
    if (!f) return;
    if (f->kind == FilterExpr::Kind::Bool && !f->bval) return;  // default: omitted
    if (f->kind == FilterExpr::Kind::Bool && f->bval) {
      os_ << "@ ";
      return;
    }
    os_ << "@(";
    filter_expr(*f, 0);
    os_ << ") ";
  }

  void filter_expr(const FilterExpr& f, int level) {
    switch (f.kind) {
      case FilterExpr::Kind::Bool: os_ << (f.bval ? "true" : "false"); break;
      case FilterExpr::Kind::Param: os_ << "?" << f.param; break;
      case FilterExpr::Kind::Not:
        os_ << "!";
        filter_expr(*f.lhs, 3);
        break;
      case FilterExpr::Kind::And: {
        bool paren = level > 2;
        if (paren) os_ << "(";
        filter_expr(*f.lhs, 2);
        os_ << " & ";
        filter_expr(*f.rhs, 2);
        if (paren) os_ << ")";
        break;
      }
      case FilterExpr::Kind::Or: {
        bool paren = level > 1;
        if (paren) os_ << "(";
        filter_expr(*f.lhs, 1);
        os_ << " | ";
        filter_expr(*f.rhs, 1);
        if (paren) os_ << ")";
        break;
      }
    }
  }

  void type(const TypeRef& t) {
    switch (t.kind) {
      case TypeRef::Kind::Int: os_ << "int"; break;
      case TypeRef::Kind::Bool: os_ << "bool"; break;
      case TypeRef::Kind::Unit: os_ << "()"; break;
      case TypeRef::Kind::Stream: os_ << "stream"; break;
      case TypeRef::Kind::Named: os_ << t.name; break;
      case TypeRef::Kind::SliceRef:
        os_ << (t.is_mut ? "&mut [" : "&[");
        type(*t.elem);
        os_ << "]";
        break;
      case TypeRef::Kind::Fn:
        os_ << "fn(";
        for (size_t i = 0; i < t.params.size(); ++i) {
          if (i) os_ << ", ";
          type(*t.params[i]);
        }
        os_ << ") -> ";
        type(*t.ret);
        break;
    }
  }

  // `level` is the binding strength of the context; parenthesize when the
  // printed expression binds less tightly.
  void expr(const Expr& e, int level) {
    switch (e.kind) {
      case Expr::Kind::IntLit:
        if (!e.sval.empty()) os_ << e.sval;
        else os_ << e.ival;
        break;
      case Expr::Kind::BoolLit: os_ << (e.bval ? "true" : "false"); break;
      case Expr::Kind::StrLit: os_ << '"' << e.sval << '"'; break;
      case Expr::Kind::UnitLit: os_ << "()"; break;
      case Expr::Kind::Var: os_ << e.sval; break;
      case Expr::Kind::Let:
        os_ << "let " << (e.is_mut ? "mut " : "") << e.sval;
        if (e.type) {
          os_ << ": ";
          type(*e.type);
        }
        if (e.a) {
          os_ << " = ";
          expr(*e.a, 0);
        }
        break;
      case Expr::Kind::Assign: {
        bool paren = level > 0;
        if (paren) os_ << "(";
        expr(*e.a, 1);
        os_ << " " << e.assign_op << " ";
        expr(*e.b, 0);
        if (paren) os_ << ")";
        break;
      }
      case Expr::Kind::PostIncr:
        expr(*e.a, 12);
        os_ << "++";
        break;
      case Expr::Kind::Unary: {
        bool paren = level > 11;
        if (paren) os_ << "(";
        os_ << (e.uop == UnOp::Neg ? "-" : "!");
        expr(*e.a, 11);
        if (paren) os_ << ")";
        break;
      }
      case Expr::Kind::DynMark: {
        bool paren = level > 11;
        if (paren) os_ << "(";
        os_ << "$";
        expr(*e.a, 11);
        if (paren) os_ << ")";
        break;
      }
      case Expr::Kind::Binary: {
        int lv = binop_level(e.bop);
        bool paren = level > lv;
        if (paren) os_ << "(";
        expr(*e.a, lv);
        os_ << " " << binop_text(e.bop) << " ";
        expr(*e.b, lv + 1);
        if (paren) os_ << ")";
        break;
      }
      case Expr::Kind::Call:
        expr(*e.a, 12);
        os_ << "(";
        for (size_t i = 0; i < e.elems.size(); ++i) {
          if (i) os_ << ", ";
          expr(*e.elems[i], 0);
        }
        os_ << ")";
        break;
      case Expr::Kind::Field:
        expr(*e.a, 12);
        os_ << "." << e.sval;
        break;
      case Expr::Kind::Lambda: {
        bool paren = level > 0;
        if (paren) os_ << "(";
        filter(e.filter);
        if (e.params.empty()) {
          os_ << "|| ";
        } else {
          os_ << "|";
          for (size_t i = 0; i < e.params.size(); ++i) {
            if (i) os_ << ", ";
            os_ << e.params[i].name;
            if (e.params[i].type) {
              os_ << ": ";
              type(*e.params[i].type);
            }
          }
          os_ << "| ";
        }
        expr(*e.a, 1);
        if (paren) os_ << ")";
        break;
      }
      case Expr::Kind::If:
        os_ << "if ";
        expr(*e.a, 1);
        os_ << " ";
        expr(*e.b, 0);
        if (e.c) {
          os_ << " else ";
          expr(*e.c, 0);
        }
        break;
      case Expr::Kind::Record:
        os_ << e.sval << " { ";
        for (size_t i = 0; i < e.fields.size(); ++i) {
          if (i) os_ << ", ";
          os_ << e.fields[i].first << ": ";
          expr(*e.fields[i].second, 0);
        }
        os_ << " }";
        break;
      case Expr::Kind::ArrayLit:
        os_ << "[";
        for (size_t i = 0; i < e.elems.size(); ++i) {
          if (i) os_ << ", ";
          expr(*e.elems[i], 0);
        }
        os_ << "]";
        break;
      case Expr::Kind::For:
        os_ << "for ";
        for (size_t i = 0; i < e.names.size(); ++i) {
          if (i) os_ << ", ";
          os_ << e.names[i];
        }
        os_ << " in ";
        expr(*e.a, 1);
        os_ << " ";
        expr(*e.b, 0);
        break;
      case Expr::Kind::With:
        os_ << "with ";
        for (size_t i = 0; i < e.names.size(); ++i) os_ << e.names[i] << (i + 1 < e.names.size() ? ", " : " in ");
        expr(*e.a, 1);
        os_ << " ";
        expr(*e.b, 0);
        break;
      case Expr::Kind::Block: {
        os_ << "{";
        indent_++;
        for (const ExprPtr& s : e.elems) {
          nl();
          expr(*s, 0);
          bool blockish = s->kind == Expr::Kind::If || s->kind == Expr::Kind::For ||
                          s->kind == Expr::Kind::With || s->kind == Expr::Kind::Block;
          if (!blockish) os_ << ";";
        }
        if (e.tail) {
          nl();
          expr(*e.tail, 0);
        }
        indent_--;
        nl();
        os_ << "}";
        break;
      }
    }
  }
};

ExprPtr desugar_expr(const ExprPtr& e);

ExprPtr desugar_child(const ExprPtr& e) { return e ? desugar_expr(e) : nullptr; }

ExprPtr desugar_expr(const ExprPtr& e) {
  auto out = std::make_shared<Expr>(*e);
  out->a = desugar_child(e->a);
  out->b = desugar_child(e->b);
  out->c = desugar_child(e->c);
  out->tail = desugar_child(e->tail);
  out->elems.clear();
  for (const ExprPtr& k : e->elems) out->elems.push_back(desugar_expr(k));
  out->fields.clear();
  for (const auto& [n, v] : e->fields) out->fields.emplace_back(n, desugar_expr(v));

  if (out->kind == Expr::Kind::For || out->kind == Expr::Kind::With) {
    // for v1,..,vn in iter(a1,..,am) { B }  ==>  iter(a1,..,am, |v1,..,vn| { B })
    ExprPtr call = out->a;  // already desugared; kind == Call
    auto lam = Expr::make(Expr::Kind::Lambda, out->span);
    for (const std::string& n : out->names) {
      Param p;
      p.name = n;
      p.span = out->span;
      lam->params.push_back(std::move(p));
    }
    lam->a = out->b;
    auto rewritten = std::make_shared<Expr>(*call);
    rewritten->elems.push_back(lam);
    return rewritten;
  }
  return out;
}

}  // namespace

std::string print_program(const Program& p) {
  Printer pr;
  return pr.run(p);
}

std::string print_expr(const Expr& e) {
  Printer pr;
  return pr.run_expr(e);
}

Program desugar(const Program& p) {
  Program out;
  for (const Item& it : p.items) {
    Item copy = it;
    if (copy.kind == Item::Kind::Func && copy.func.body)
      copy.func.body = desugar_expr(copy.func.body);
    out.items.push_back(std::move(copy));
  }
  return out;
}

}  // namespace impc::ast
