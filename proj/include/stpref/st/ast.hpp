#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "stpref/st/diagnostic.hpp"
#include "stpref/st/types.hpp"

// Value-semantic AST for the supported Structured Text subset. Equality is
// structural and ignores source spans, so a reparsed pretty-print compares
// equal to the original tree.
namespace stpref::st {

// Heap box with value semantics (deep copy, deep equality). May be empty.
template <class T>
class Box {
 public:
  Box() = default;
  Box(T value) : ptr_(std::make_unique<T>(std::move(value))) {}
  Box(const Box& other) : ptr_(other.ptr_ ? std::make_unique<T>(*other.ptr_) : nullptr) {}
  Box(Box&&) noexcept = default;
  Box& operator=(const Box& other) {
    if (this != &other) ptr_ = other.ptr_ ? std::make_unique<T>(*other.ptr_) : nullptr;
    return *this;
  }
  Box& operator=(Box&&) noexcept = default;
  ~Box() = default;

  explicit operator bool() const { return static_cast<bool>(ptr_); }
  T& operator*() { return *ptr_; }
  const T& operator*() const { return *ptr_; }
  T* operator->() { return ptr_.get(); }
  const T* operator->() const { return ptr_.get(); }

  friend bool operator==(const Box& a, const Box& b) {
    if (!a.ptr_ || !b.ptr_) return !a.ptr_ && !b.ptr_;
    return *a.ptr_ == *b.ptr_;
  }

 private:
  std::unique_ptr<T> ptr_;
};

// ---------------------------------------------------------------- types

struct ArrayDim {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  friend bool operator==(const ArrayDim&, const ArrayDim&) = default;
};

struct DataType {
  enum class Kind { elementary, array, named };

  Kind kind = Kind::elementary;
  Elementary elementary = Elementary::INT;
  std::optional<std::uint32_t> string_length;  // STRING(n) / STRING[n]
  std::vector<ArrayDim> dims;                   // array only
  Box<DataType> element;                        // array only
  std::string name;                             // named (function block type)

  static DataType of(Elementary e) {
    DataType t;
    t.kind = Kind::elementary;
    t.elementary = e;
    return t;
  }
  static DataType named_type(std::string n) {
    DataType t;
    t.kind = Kind::named;
    t.name = std::move(n);
    return t;
  }
  static DataType array_of(std::vector<ArrayDim> dims, DataType element) {
    DataType t;
    t.kind = Kind::array;
    t.dims = std::move(dims);
    t.element = Box<DataType>(std::move(element));
    return t;
  }

  friend bool operator==(const DataType& a, const DataType& b);
};

std::string to_string(const DataType& t);

// ---------------------------------------------------------- expressions

struct Expr;

enum class LiteralKind { integer, real, boolean, string, time };

struct Literal {
  LiteralKind kind = LiteralKind::integer;
  std::uint64_t int_value = 0;  // magnitude; negation is a Unary node
  double real_value = 0.0;
  bool bool_value = false;
  std::string string_value;
  std::int64_t time_ns = 0;
  std::string type_prefix;  // upper-case type name for typed literals, else empty

  friend bool operator==(const Literal& a, const Literal& b);
};

struct VarRef {
  std::string name;
  std::vector<Expr> indices;         // a[i, j]
  std::vector<std::string> members;  // inst.Q
  friend bool operator==(const VarRef&, const VarRef&);
};

enum class UnaryOp { Not, Neg };

struct Unary {
  UnaryOp op = UnaryOp::Neg;
  Box<Expr> operand;
  friend bool operator==(const Unary&, const Unary&) = default;
};

enum class BinaryOp { Add, Sub, Mul, Div, Mod, Pow, Eq, Ne, Lt, Le, Gt, Ge, And, Or, Xor };

const char* to_string(BinaryOp op);

struct Argument {
  std::optional<std::string> name;  // formal parameter name for `p := v` / `p => v`
  bool output = false;              // `p => v`
  Box<Expr> value;
  friend bool operator==(const Argument&, const Argument&) = default;
};

struct FnCall {
  std::string name;
  std::vector<Argument> args;
  friend bool operator==(const FnCall&, const FnCall&) = default;
};

struct Binary {
  BinaryOp op = BinaryOp::Add;
  Box<Expr> lhs;
  Box<Expr> rhs;
  friend bool operator==(const Binary&, const Binary&) = default;
};

struct Expr {
  std::variant<Literal, VarRef, Unary, Binary, FnCall> node;
  Span span;

  friend bool operator==(const Expr& a, const Expr& b) { return a.node == b.node; }
};

// ----------------------------------------------------------- statements

struct Stmt;
using StmtList = std::vector<Stmt>;

struct Assignment {
  VarRef target;
  Expr value;
  friend bool operator==(const Assignment&, const Assignment&) = default;
};

struct IfBranch {
  Expr condition;
  StmtList body;
  friend bool operator==(const IfBranch&, const IfBranch&);
};

struct If {
  std::vector<IfBranch> branches;  // IF + ELSIFs, at least one
  std::optional<StmtList> else_body;
  friend bool operator==(const If&, const If&);
};

struct CaseLabel {
  std::int64_t lo = 0;
  std::int64_t hi = 0;  // equal to lo for a single value
  friend bool operator==(const CaseLabel&, const CaseLabel&) = default;
};

struct CaseArm {
  std::vector<CaseLabel> labels;
  StmtList body;
  Span span;
  friend bool operator==(const CaseArm&, const CaseArm&);
};

struct Case {
  Expr selector;
  std::vector<CaseArm> arms;
  std::optional<StmtList> else_body;
  friend bool operator==(const Case&, const Case&);
};

struct For {
  std::string var;
  Expr from;
  Expr to;
  std::optional<Expr> by;
  StmtList body;
  friend bool operator==(const For&, const For&);
};

struct While {
  Expr condition;
  StmtList body;
  friend bool operator==(const While&, const While&);
};

struct Repeat {
  StmtList body;
  Expr until;
  friend bool operator==(const Repeat&, const Repeat&);
};

struct CallStmt {
  VarRef callee;
  std::vector<Argument> args;
  friend bool operator==(const CallStmt&, const CallStmt&) = default;
};

struct Exit {
  friend bool operator==(const Exit&, const Exit&) = default;
};
struct Return {
  friend bool operator==(const Return&, const Return&) = default;
};
struct Empty {
  friend bool operator==(const Empty&, const Empty&) = default;
};

struct Stmt {
  std::variant<Assignment, If, Case, For, While, Repeat, CallStmt, Exit, Return, Empty> node;
  Span span;

  friend bool operator==(const Stmt& a, const Stmt& b) { return a.node == b.node; }
};

// --------------------------------------------------------- declarations

enum class VarKind { Input, Output, InOut, Local, Temp, Constant };

struct VarDecl {
  std::string name;
  DataType type;
  std::optional<Expr> init;
  Span span;

  friend bool operator==(const VarDecl& a, const VarDecl& b) {
    return a.name == b.name && a.type == b.type && a.init == b.init;
  }
};

struct VarBlock {
  VarKind kind = VarKind::Local;
  std::vector<VarDecl> decls;
  friend bool operator==(const VarBlock&, const VarBlock&) = default;
};

enum class PouKind { Program, Function, FunctionBlock };

struct Pou {
  PouKind kind = PouKind::Program;
  std::string name;
  std::optional<DataType> return_type;  // FUNCTION only
  std::vector<VarBlock> var_blocks;
  StmtList body;
  Span span;

  friend bool operator==(const Pou& a, const Pou& b) {
    return a.kind == b.kind && a.name == b.name && a.return_type == b.return_type &&
           a.var_blocks == b.var_blocks && a.body == b.body;
  }
};

struct SourceUnit {
  std::vector<VarBlock> global_vars;
  std::vector<Pou> pous;
  friend bool operator==(const SourceUnit&, const SourceUnit&) = default;
};

// Case-insensitive identifier comparison (ASCII).
bool same_identifier(std::string_view a, std::string_view b);
std::string to_upper(std::string_view s);

}  // namespace stpref::st
