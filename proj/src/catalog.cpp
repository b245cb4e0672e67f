#include "qf3/identities.hpp"

namespace qf3 {

namespace {

Mat3i rows(std::initializer_list<std::initializer_list<i64>> r) {
  Mat3i m;
  int i = 0;
  for (const auto& row : r) {
    int j = 0;
    for (i64 v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

Precondition divides(i64 modulus, i64 cx, i64 cy, i64 cz) { return {{cx, cy, cz}, modulus}; }

struct Builder {
  std::vector<ScaledIsometry> out;

  ScaledIsometry& add(std::string tag, const char* target, const char* source, i64 scale, i64 den, Mat3i num,
                      std::vector<Precondition> pre = {}, std::string note = {}) {
    ScaledIsometry e{std::move(tag), parse_form(source), parse_form(target), scale, num, den, std::move(pre),
                     {}, ExpectedStatus::Verifies, {}, std::move(note)};
    out.push_back(std::move(e));
    return out.back();
  }
};

const Mat3i kSwapXY = rows({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}});
const Mat3i kSwapYZ = rows({{1, 0, 0}, {0, 0, 1}, {0, 1, 0}});
const Mat3i kShearXY = rows({{1, -1, 0}, {0, -1, 0}, {0, 0, 1}});  // (x - y, -y, z)
const Mat3i kShearYZ = rows({{1, 0, 0}, {0, 1, 1}, {0, 0, -1}});   // (x, y + z, -z)

std::vector<ScaledIsometry> build() {
  Builder b;

  // Two-class genus of 2x^2+3y^2+10z^2; every representation of 8n+5 by the
  // mate has even x.
  b.add("2,3,10<=3,5,5,2,-2,2", "2,3,10", "3,5,5,2,-2,2", 1, 2, rows({{1, 2, -2}, {0, 2, 2}, {1, 0, 0}}),
        {divides(2, 1, 0, 0)}, "f(x/2+y-z, y+z, x/2) = g(x,y,z)");

  // Rational automorph of x^2+2y^2+3z^2 that flips the parity of all three
  // coordinates of an odd value.
  b.add("1,2,3:parity-flip", "1,2,3", "1,2,3", 1, 5, rows({{2, 6, 3}, {3, -1, -3}, {1, -2, 4}}),
        {divides(5, 1, -2, 4)}, "z* = (x-2y+4z)/5, x* = 2y-z+2z*, y* = y-3z+3z*");

  // 7 times an odd value. Against x^2+3y^2+2yz+5z^2 the substitution does not
  // match; both substitutions expand to 7(r^2+2s^2+3t^2).
  {
    auto& e = b.add("1,3,14<=1,3,5,2,0,0:erratum", "1,3,14", "1,3,5,2,0,0", 7, 1,
                    rows({{2, 0, -3}, {1, 0, 2}, {0, 1, 0}}), {}, "(2r-3t)^2+3(r+2t)^2+14s^2 = 7F(r,s,t)");
    e.expected = ExpectedStatus::Erratum;
    auto& c = b.add("1,3,14<=1,2,3", "1,3,14", "1,2,3", 7, 1, rows({{2, 0, -3}, {1, 0, 2}, {0, 1, 0}}), {},
                    "(2r-3t)^2+3(r+2t)^2+14s^2 = 7(r^2+2s^2+3t^2)");
    c.corrects = "1,3,14<=1,3,5,2,0,0:erratum";
  }
  b.add("2,3,7<=1,2,3", "2,3,7", "1,2,3", 7, 1, rows({{0, 1, 3}, {0, 2, -1}, {1, 0, 0}}), {},
        "2(s+3t)^2+3(2s-t)^2+7r^2 = 7(r^2+2s^2+3t^2)");

  // 5(r^2+s^2+6t^2) = 2(r +- 3t)^2 + 3(r -+ 2t)^2 + 5s^2 and the r <-> s variant.
  b.add("2,3,5<=1,1,6:r+", "2,3,5", "1,1,6", 5, 1, rows({{1, 0, 3}, {1, 0, -2}, {0, 1, 0}}));
  b.add("2,3,5<=1,1,6:r-", "2,3,5", "1,1,6", 5, 1, rows({{1, 0, -3}, {1, 0, 2}, {0, 1, 0}}));
  b.add("2,3,5<=1,1,6:s+", "2,3,5", "1,1,6", 5, 1, rows({{0, 1, 3}, {0, 1, -2}, {1, 0, 0}}));
  b.add("2,3,5<=1,1,6:s-", "2,3,5", "1,1,6", 5, 1, rows({{0, 1, -3}, {0, 1, 2}, {1, 0, 0}}));

  b.add("1,1,15<=1,1,3", "1,1,15", "1,1,3", 5, 1, rows({{1, 2, 0}, {2, -1, 0}, {0, 0, 1}}), {},
        "(x+2y)^2+(2x-y)^2+15z^2");
  b.add("3,3,5<=1,3,3", "3,3,5", "1,3,3", 5, 1, rows({{0, 1, 2}, {0, 2, -1}, {1, 0, 0}}), {},
        "3(v+2w)^2+3(2v-w)^2+5u^2");
  b.add("1,1,30<=1,1,6", "1,1,30", "1,1,6", 5, 1, rows({{1, 2, 0}, {2, -1, 0}, {0, 0, 1}}), {},
        "(x+2y)^2+(2x-y)^2+30z^2");
  b.add("1,6,15<=2,3,3", "1,6,15", "2,3,3", 5, 1, rows({{2, 3, 0}, {1, -1, 0}, {0, 0, 1}}), {},
        "(2u+3v)^2+6(u-v)^2+15w^2");
  {
    auto& e = b.add("3,3,10<=2,3,3:erratum", "3,3,10", "2,3,3", 5, 1, rows({{1, 2, 0}, {0, 2, -1}, {1, 0, 0}}), {},
                    "3(u+2v)^2+3(2v-w)^2+10u^2");
    e.expected = ExpectedStatus::Erratum;
    auto& c = b.add("3,3,10<=2,3,3", "3,3,10", "2,3,3", 5, 1, rows({{0, 1, 2}, {0, 2, -1}, {1, 0, 0}}), {},
                    "3(v+2w)^2+3(2v-w)^2+10u^2");
    c.corrects = "3,3,10<=2,3,3:erratum";
  }
  b.add("1,2,15<=1,2,5", "1,2,15", "1,2,5", 3, 1, rows({{1, -2, 0}, {1, 1, 0}, {0, 0, 1}}), {},
        "(x-2y)^2+2(x+y)^2+15z^2");
  b.add("3,5,10<=1,5,10", "3,5,10", "1,5,10", 3, 1, rows({{1, 0, 0}, {0, 1, -2}, {0, 1, 1}}), {},
        "3u^2+5(v-2w)^2+10(v+w)^2");

  // Genus of x^2+3y^2+5z^2.
  b.add("1,3,5<=1,2,8,-2,0,0:minus", "1,3,5", "1,2,8,-2,0,0", 1, 3, rows({{1, -1, -7}, {1, 2, -1}, {1, -1, 2}}),
        {divides(3, 1, -1, -1)});
  b.add("1,3,5<=1,2,8,-2,0,0:plus", "1,3,5", "1,2,8,-2,0,0", 1, 3, rows({{1, 1, 7}, {1, -2, 1}, {1, 1, -2}}),
        {divides(3, 1, 1, 1)});

  // Genus of x^2+5y^2+15z^2.
  b.add("1,5,15<=4,4,5,0,0,2:upper", "1,5,15", "4,4,5,0,0,2", 1, 3, rows({{1, 4, -5}, {2, -1, -1}, {1, 1, 1}}),
        {divides(3, 1, 1, 1)});
  b.add("1,5,15<=4,4,5,0,0,2:lower", "1,5,15", "4,4,5,0,0,2", 1, 3, rows({{1, 4, 5}, {2, -1, 1}, {1, 1, -1}}),
        {divides(3, 1, 1, -1)});

  // Genus of x^2+3y^2+15z^2 and the infinite-order automorph of its mate.
  b.add("3,4,4,2,0,0:rotation", "3,4,4,2,0,0", "3,4,4,2,0,0", 1, 3, rows({{1, 2, -2}, {-2, 2, 1}, {2, 1, 2}}),
        {divides(3, 1, 2, -2)}, "fixes the line (0,t,t)");
  b.add("1,3,15<=3,4,4,2,0,0:a", "1,3,15", "3,4,4,2,0,0", 1, 3, rows({{3, -3, 3}, {1, -2, -3}, {1, 1, 0}}),
        {divides(3, 1, 1, 0)});
  b.add("1,3,15<=3,4,4,2,0,0:b", "1,3,15", "3,4,4,2,0,0", 1, 3, rows({{3, 3, -3}, {1, -3, -2}, {1, 0, 1}}),
        {divides(3, 1, 0, 1)});

  // Genus of x^2+15y^2+30z^2.
  b.add("1,15,30<=6,9,10,0,0,-6", "1,15,30", "6,9,10,0,0,-6", 1, 3, rows({{3, -9, 0}, {1, 0, -2}, {1, 0, 1}}),
        {divides(3, 1, 0, 1)})
      .adjustments = {kShearXY};
  b.add("6,9,10,0,0,-6:shear", "6,9,10,0,0,-6", "6,9,10,0,0,-6", 1, 1, kShearXY, {}, "g(x-y, -y, z) = g(x,y,z)");

  // Genus of x^2+10y^2+15z^2.
  b.add("1,10,15<=5,5,6:a", "1,10,15", "5,5,6", 1, 5, rows({{5, -10, 0}, {2, 1, -3}, {2, 1, 2}}),
        {divides(5, 2, 1, 2)})
      .adjustments = {kSwapXY};
  {
    // First coordinate x+2y is wrong; only 2x+y pairs with x-2y to give 5x^2+5y^2.
    auto& e = b.add("1,10,15<=5,5,6:b:erratum", "1,10,15", "5,5,6", 1, 5,
                    rows({{5, 10, 0}, {1, -2, 3}, {1, -2, -2}}), {divides(5, 1, -2, -2)},
                    "(x+2y)^2+10((x-2y-2z)/5+z)^2+15((x-2y-2z)/5)^2");
    e.expected = ExpectedStatus::Erratum;
    auto& c = b.add("1,10,15<=5,5,6:b", "1,10,15", "5,5,6", 1, 5, rows({{10, 5, 0}, {1, -2, 3}, {1, -2, -2}}),
                    {divides(5, 1, -2, -2)});
    c.adjustments = {kSwapXY};
    c.corrects = "1,10,15<=5,5,6:b:erratum";
  }

  // Genus of 3x^2+5y^2+6z^2.
  b.add("3,5,6<=2,6,9,6,0,0", "3,5,6", "2,6,9,6,0,0", 1, 3, rows({{2, -1, -3}, {0, -3, 0}, {1, 1, 3}}),
        {divides(3, 1, 1, 0)})
      .adjustments = {kShearYZ};
  b.add("2,6,9,6,0,0:shear", "2,6,9,6,0,0", "2,6,9,6,0,0", 1, 1, kShearYZ, {}, "f(x, y+z, -z) = f(x,y,z)");

  // Genus of 3x^2+5y^2+15z^2 and the infinite-order automorph of its mate.
  b.add("2,8,15,0,0,-2:rotation", "2,8,15,0,0,-2", "2,8,15,0,0,-2", 1, 3,
        rows({{3, -2, -2}, {0, -1, -4}, {0, 2, -1}}), {divides(3, 0, 1, 1)}, "fixes the line (t,0,0)");
  b.add("3,5,15<=2,8,15,0,0,-2:a", "3,5,15", "2,8,15,0,0,-2", 1, 3, rows({{1, -3, -5}, {0, -3, 3}, {-1, 0, -1}}),
        {divides(3, 1, 0, 1)})
      .adjustments = {kShearXY};
  b.add("3,5,15<=2,8,15,0,0,-2:b", "3,5,15", "2,8,15,0,0,-2", 1, 3, rows({{1, 2, 5}, {0, 3, -3}, {1, -1, -1}}),
        {divides(3, 1, -1, -1)})
      .adjustments = {kShearXY};
  b.add("2,8,15,0,0,-2:shear", "2,8,15,0,0,-2", "2,8,15,0,0,-2", 1, 1, kShearXY, {}, "g(x-y, -y, z) = g(x,y,z)");

  // Genus of 3x^2+5y^2+30z^2.
  b.add("3,5,30<=2,15,15:a", "3,5,30", "2,15,15", 1, 5, rows({{0, 10, 5}, {2, 3, -6}, {1, -1, 2}}),
        {divides(5, 1, -1, 2)})
      .adjustments = {kSwapYZ};
  b.add("3,5,30<=2,15,15:b", "3,5,30", "2,15,15", 1, 5, rows({{0, 5, 10}, {2, 6, -3}, {1, -2, 1}}),
        {divides(5, 1, -2, 1)})
      .adjustments = {kSwapYZ};

  // x^2+8y^2+64z^2 = x^2+2(2y)^2+64z^2.
  b.add("1,2,64<=1,8,64", "1,2,64", "1,8,64", 1, 1, rows({{1, 0, 0}, {0, 2, 0}, {0, 0, 1}}));

  return std::move(b.out);
}

}  // namespace

const std::vector<ScaledIsometry>& builtin_catalog() {
  static const std::vector<ScaledIsometry> catalog = build();
  return catalog;
}

}  // namespace qf3
