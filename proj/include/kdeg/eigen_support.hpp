#pragma once

#include <Eigen/Core>

#include "kdeg/fp.hpp"
#include "kdeg/int.hpp"

namespace Eigen {

template <>
struct NumTraits<kdeg::Int> : GenericNumTraits<kdeg::Int> {
  typedef kdeg::Int Real;
  typedef kdeg::Int NonInteger;
  typedef kdeg::Int Nested;
  typedef kdeg::Int Literal;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 30,
    MulCost = 50,
  };
  static inline Real epsilon() { return kdeg::Int(0); }
  static inline Real dummy_precision() { return kdeg::Int(0); }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<kdeg::Rat> : GenericNumTraits<kdeg::Rat> {
  typedef kdeg::Rat Real;
  typedef kdeg::Rat NonInteger;
  typedef kdeg::Rat Nested;
  typedef kdeg::Rat Literal;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100,
  };
  static inline Real epsilon() { return kdeg::Rat(0); }
  static inline Real dummy_precision() { return kdeg::Rat(0); }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<kdeg::Fp> : GenericNumTraits<kdeg::Fp> {
  typedef kdeg::Fp Real;
  typedef kdeg::Fp NonInteger;
  typedef kdeg::Fp Nested;
  typedef kdeg::Fp Literal;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 0,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 2,
    MulCost = 4,
  };
  static inline Real epsilon() { return kdeg::Fp(0); }
  static inline Real dummy_precision() { return kdeg::Fp(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace kdeg {

template <class S>
using MatX = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using VecX = Eigen::Matrix<S, Eigen::Dynamic, 1>;

}  // namespace kdeg
