#pragma once

#include <gtest/gtest.h>

#include "desargues/desargues.hpp"

namespace testing_helpers {

using desargues::Rational;
using desargues::Residue;
using QP = desargues::ProjPoint<Rational>;
using QPair = desargues::PointPair<Rational>;
using QConfig = desargues::InvolutionConfig<Rational>;

inline Rational q(long long n, long long d = 1) { return desargues::make_rational(n, d); }
inline QP pt(long long n, long long d = 1) { return QP::finite(q(n, d)); }
inline QP inf() { return QP::infinity(desargues::FieldSpec::rationals()); }
inline QPair pr(QP a, QP b) { return QPair{a, b}; }
inline QPair pr(long long a, long long b) { return QPair{pt(a), pt(b)}; }
inline QConfig cfg(QPair a, QPair b, QPair c) { return QConfig{{a, b, c}}; }

}  // namespace testing_helpers

#define EXPECT_ERROR_KIND(expr, k)                                   \
  do {                                                               \
    try {                                                            \
      (void)(expr);                                                  \
      ADD_FAILURE() << "expected " << desargues::to_string(k);       \
    } catch (const desargues::Error& e) {                            \
      EXPECT_EQ(e.kind(), k) << e.what();                            \
    }                                                                \
  } while (0)
