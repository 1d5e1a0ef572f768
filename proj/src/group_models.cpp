#include "lcs/catalog.hpp"
#include "lcs/notation.hpp"

namespace lcs {

namespace {

PolyFunc V(const std::string& name) { return SparsePoly::variable(name); }
PolyFunc C(long p, long q = 1) { return SparsePoly::constant(Rational(BigInt(p), BigInt(q))); }

LatticeSpec integer_lattice(std::size_t k) {
  LatticeSpec lat;
  lat.constraints.assign(k, LatticeConstraint{Rational(1), Rational(0)});
  return lat;
}

GroupModel heisenberg3_model() {
  GroupModel m;
  m.name = "heis3";
  std::vector<std::string> cs{"x", "y", "z"};
  PolyFunc x = V("x"), y = V("y"), z = V("z");
  PolyFunc xp = V("x'"), yp = V("y'"), zp = V("z'");
  m.group = make_group_law(cs, {x + xp, y + yp, z + zp + y * xp});
  m.coframe_names = {"alpha", "beta", "theta"};
  m.coframe = {
      one_form(cs, {{1, C(1)}}),                  // dx
      one_form(cs, {{2, C(1)}}),                  // dy
      one_form(cs, {{3, C(1)}, {1, -y}}),         // dz - y dx
  };
  m.algebra = parse_structure_notation("(0,0,12)");
  m.algebra.label = "heis3";
  PolyFunc t = V("t");
  m.flow = PolyMap{cs, cs, {x + t * y, y, z + t * y * y * C(1, 2)}};
  m.flow_param = "t";
  m.preserved_form = 2;  // theta
  LatticeSpec lat;
  lat.constraints = {{Rational(1), Rational(0)},
                     {Rational(2), Rational(0)},
                     {Rational(2), Rational(0)}};
  m.lattice = lat;
  return m;
}

GroupModel dim4_model() {
  GroupModel m;
  m.name = "G4";
  std::vector<std::string> cs{"x", "y", "z", "t"};
  PolyFunc x = V("x"), y = V("y"), z = V("z"), t = V("t");
  PolyFunc xp = V("x'"), yp = V("y'"), zp = V("z'"), tp = V("t'");
  m.group = make_group_law(
      cs, {x + xp + t * yp, y + yp,
           z + zp + t * yp * yp * C(1, 2) + y * xp + t * y * yp, t + tp});
  // coframe order (omega, eta, alpha, beta), dual to (U, V, A, B)
  m.coframe_names = {"omega", "eta", "alpha", "beta"};
  m.coframe = {
      one_form(cs, {{4, C(1)}}),                 // dt
      one_form(cs, {{3, C(1)}, {1, -y}}),        // dz - y dx
      one_form(cs, {{1, C(1)}, {2, -t}}),        // dx - t dy
      one_form(cs, {{2, C(1)}}),                 // dy
  };
  m.algebra = parse_structure_notation("(0,34,-14,0)");
  m.algebra.label = "G4";
  return m;
}

GroupModel dim5_contact_model() {
  GroupModel m;
  m.name = "H5";
  std::vector<std::string> cs{"x", "y", "z", "t", "w"};
  PolyFunc x = V("x"), y = V("y"), z = V("z"), t = V("t"), w = V("w");
  PolyFunc xp = V("x'"), yp = V("y'"), zp = V("z'"), tp = V("t'"), wp = V("w'");
  m.group = make_group_law(cs, {x + xp, y + yp, z + zp + x * xp, t + tp + y * xp,
                                w + wp + y * zp + t * xp});
  // the contact coframe (second basis of the section)
  m.coframe_names = {"alpha", "beta", "gamma", "delta", "theta"};
  m.coframe = {
      one_form(cs, {{1, C(1)}}),                          // dx
      one_form(cs, {{2, C(1)}}),                          // dy
      one_form(cs, {{3, C(1)}, {1, -x}}),                 // dz - x dx
      one_form(cs, {{4, C(1)}, {1, -y}}),                 // dt - y dx
      one_form(cs, {{5, C(1)}, {3, -y}, {1, x * y - t}}), // dw - y dz + (xy - t) dx
  };
  m.algebra = parse_structure_notation("(0,0,0,12,14-23)");
  m.algebra.label = "H5";
  PolyFunc s = V("s");
  m.flow = PolyMap{
      cs, cs,
      {x, y + s * x, z + s * y + s * s * x * C(1, 2),
       t + s * z + s * s * y * C(1, 2) + s * s * s * x * C(1, 6),
       w + s * x * z + s * y * y * C(1, 2) - s * x * x * x * C(1, 3) +
           s * s * x * y + s * s * s * x * x * C(1, 3)}};
  m.flow_param = "s";
  m.preserved_form = 4;  // theta
  LatticeSpec lat;
  lat.constraints = {{Rational(6), Rational(0)},
                     {Rational(2), Rational(0)},
                     {Rational(1), Rational(0)},
                     {Rational(1), Rational(0)},
                     {Rational(1), Rational(0)}};
  m.lattice = lat;
  return m;
}

GroupModel dim5_first_coframe_model() {
  GroupModel m = dim5_contact_model();
  m.name = "H5(first coframe)";
  std::vector<std::string> cs{"x", "y", "z", "t", "w"};
  PolyFunc x = V("x");
  m.coframe_names = {"alpha", "beta", "gamma", "delta", "eta"};
  m.coframe[2] = one_form(cs, {{1, x}, {3, C(-1)}});  // x dx - dz
  m.algebra = parse_structure_notation("(0,0,0,12,14+23)");
  m.algebra.label = "L5,3";
  m.flow.reset();
  m.flow_param.clear();
  m.preserved_form = -1;
  m.lattice = integer_lattice(5);
  return m;
}

GroupModel dim6_model() {
  GroupModel m;
  m.name = "G6";
  std::vector<std::string> cs{"x", "y", "z", "t", "w", "s"};
  PolyFunc x = V("x"), y = V("y"), z = V("z"), t = V("t"), w = V("w"), s = V("s");
  PolyFunc xp = V("x'"), yp = V("y'"), zp = V("z'"), tp = V("t'"), wp = V("w'"),
           sp = V("s'");
  m.group = make_group_law(
      cs,
      {x + xp,
       y + yp + s * xp,
       z + zp + x * xp + s * yp + s * s * xp * C(1, 2),
       t + tp + y * xp + s * zp + s * s * yp * C(1, 2) + s * s * s * xp * C(1, 6),
       w + wp + t * xp + y * zp +
           s * (xp * zp + y * yp + yp * yp * C(1, 2) - xp * xp * xp * C(1, 3)) +
           s * s * (xp * yp + y * xp * C(1, 2)) + s * s * s * xp * xp * C(1, 3),
       s + sp});
  m.coframe_names = {"omega", "alpha", "beta", "gamma", "delta", "eta"};
  m.coframe = {
      one_form(cs, {{6, C(1)}}),                                    // ds
      one_form(cs, {{1, C(1)}}),                                    // dx
      one_form(cs, {{2, C(1)}, {1, -s}}),                           // dy - s dx
      one_form(cs, {{3, C(1)}, {2, -s}, {1, s * s * C(1, 2) - x}}), // dz - s dy + (s^2/2 - x) dx
      one_form(cs, {{4, C(1)},
                    {3, -s},
                    {2, s * s * C(1, 2)},
                    {1, x * s - y - s * s * s * C(1, 6)}}),         // dt - s dz + ...
      one_form(cs, {{5, C(1)}, {3, -y}, {1, x * y - t}}),           // dw - y dz - (t - xy) dx
  };
  m.algebra = parse_structure_notation("(0,0,-12,-13,-14+23,25-34)");
  m.algebra.label = "L6,22(coframe)";
  return m;
}

GroupModel family_model(int n) {
  GroupModel m;
  m.name = "H" + std::to_string(2 * n - 1) + "(family)";
  std::vector<std::string> cs;
  for (int i = 1; i <= n - 1; ++i) {
    cs.push_back("x" + std::to_string(i));
    cs.push_back("y" + std::to_string(i));
  }
  cs.push_back("w");
  auto xi = [&](int i) { return V("x" + std::to_string(i)); };
  auto yi = [&](int i) { return V("y" + std::to_string(i)); };
  auto xpi = [&](int i) { return V("x" + std::to_string(i) + "'"); };
  auto ypi = [&](int i) { return V("y" + std::to_string(i) + "'"); };
  std::vector<PolyFunc> comps;
  for (int i = 1; i <= n - 1; ++i) {
    comps.push_back(xi(i) + xpi(i));
    if (i == 1)
      comps.push_back(yi(1) + ypi(1) + xi(n - 1) * xpi(n - 1));
    else if (i == n - 1)
      comps.push_back(yi(n - 1) + ypi(n - 1) + xi(1) * xpi(n - 1));
    else
      comps.push_back(yi(i) + ypi(i));
  }
  PolyFunc wc = V("w") + V("w'") + yi(n - 1) * xpi(n - 1);
  for (int i = 1; i <= n - 2; ++i) wc += xi(i) * ypi(i);
  comps.push_back(wc);
  m.group = make_group_law(cs, std::move(comps));
  // coframe (alpha_1, beta_1, ..., alpha_{n-1}, beta_{n-1}, eta)
  const int wpos = 2 * n - 1;
  auto xpos = [](int i) { return 2 * i - 1; };
  auto ypos = [](int i) { return 2 * i; };
  for (int i = 1; i <= n - 1; ++i) {
    m.coframe_names.push_back("alpha" + std::to_string(i));
    if (i <= n - 2)
      m.coframe.push_back(one_form(cs, {{xpos(i), C(-1)}}));  // -dx_i
    else
      m.coframe.push_back(one_form(cs, {{xpos(i), C(1)}}));   // dx_{n-1}
    m.coframe_names.push_back("beta" + std::to_string(i));
    if (i == 1)
      m.coframe.push_back(one_form(cs, {{ypos(1), C(1)}, {xpos(n - 1), -xi(n - 1)}}));
    else if (i == n - 1)
      m.coframe.push_back(one_form(cs, {{ypos(n - 1), C(1)}, {xpos(n - 1), -xi(1)}}));
    else
      m.coframe.push_back(one_form(cs, {{ypos(i), C(1)}}));
  }
  m.coframe_names.push_back("eta");
  {
    std::vector<std::pair<int, PolyFunc>> comps_eta;
    comps_eta.push_back({wpos, C(1)});
    comps_eta.push_back({ypos(1), -xi(1)});
    comps_eta.push_back({xpos(n - 1), xi(1) * xi(n - 1) - yi(n - 1)});
    for (int i = 2; i <= n - 2; ++i) comps_eta.push_back({ypos(i), -xi(i)});
    m.coframe.push_back(one_form(cs, std::move(comps_eta)));
  }
  m.algebra = contact_family_algebra(n);
  m.lattice = integer_lattice(cs.size());
  return m;
}

}  // namespace

PolyWitnesses load_group_catalog() {
  PolyWitnesses out;
  out.models.push_back(heisenberg3_model());
  out.models.push_back(dim4_model());
  out.models.push_back(dim5_contact_model());
  out.models.push_back(dim5_first_coframe_model());
  out.models.push_back(dim6_model());
  out.models.push_back(family_model(3));
  out.models.push_back(family_model(4));

  // lcs-extension lift witnesses
  {
    ChiTildeWitness w;
    PolyFunc x = V("x"), y = V("y"), t = V("t");
    w.group = make_group_law({"x", "y"}, {x + V("x'"), y + V("y'")});
    w.cocycle = y * V("x'");
    w.rep = PolyMap{{"x", "y"}, {"x", "y"}, {x + t * y, y}};
    w.param = "t";
    w.chi = t * y * y * C(1, 2);
    out.chi_tildes.push_back({"shear on R^2", w});
    out.cocycles.push_back({"R^2 cocycle y x'", {w.group, w.cocycle}});
  }
  {
    ChiTildeWitness w;
    PolyFunc x = V("x"), y = V("y"), z = V("z"), t = V("t"), s = V("s");
    PolyFunc xp = V("x'"), yp = V("y'"), zp = V("z'"), tp = V("t'");
    w.group = make_group_law({"x", "y", "z", "t"},
                             {x + xp, y + yp, z + zp + x * xp, t + tp + y * xp});
    w.cocycle = y * zp + t * xp;
    w.rep = PolyMap{{"x", "y", "z", "t"},
                    {"x", "y", "z", "t"},
                    {x, y + s * x, z + s * y + s * s * x * C(1, 2),
                     t + s * z + s * s * y * C(1, 2) + s * s * s * x * C(1, 6)}};
    w.param = "s";
    w.chi = s * (x * z + y * y * C(1, 2) - x * x * x * C(1, 3)) + s * s * x * y +
            s * s * s * x * x * C(1, 3);
    out.chi_tildes.push_back({"flow on the 4-dim base", w});
    out.cocycles.push_back({"4-dim base cocycle y z' + t x'", {w.group, w.cocycle}});
  }

  // symplectic double-extension witness: base R^2 with coordinates (x, z)
  {
    DoubleChiWitness w;
    PolyFunc x = V("x"), z = V("z"), t = V("t");
    w.group = make_group_law({"x", "z"}, {x + V("x'"), z + V("z'")});
    w.cocycle = SparsePoly();  // the induced cocycle is trivial here
    w.rep = PolyMap{{"x", "z"}, {"x", "z"}, {x, z}};
    w.param = "t";
    w.chi = t * x;
    w.sigma1 = form_from_terms(2, 2, {{{1, 2}, Rational(1)}});
    w.z1 = basis_vector(2, 1);
    out.double_chis.push_back({"double extension of R^2", w});
  }

  // higher family cocycles on S_{2n-2}
  for (int n : {3, 4}) {
    std::vector<std::string> cs;
    for (int i = 1; i <= n - 1; ++i) {
      cs.push_back("x" + std::to_string(i));
      cs.push_back("y" + std::to_string(i));
    }
    auto xi = [&](int i) { return V("x" + std::to_string(i)); };
    auto yi = [&](int i) { return V("y" + std::to_string(i)); };
    auto xpi = [&](int i) { return V("x" + std::to_string(i) + "'"); };
    auto ypi = [&](int i) { return V("y" + std::to_string(i) + "'"); };
    std::vector<PolyFunc> comps;
    for (int i = 1; i <= n - 1; ++i) {
      comps.push_back(xi(i) + xpi(i));
      if (i == 1)
        comps.push_back(yi(1) + ypi(1) + xi(n - 1) * xpi(n - 1));
      else if (i == n - 1)
        comps.push_back(yi(n - 1) + ypi(n - 1) + xi(1) * xpi(n - 1));
      else
        comps.push_back(yi(i) + ypi(i));
    }
    GroupLaw s2n = make_group_law(cs, std::move(comps));
    PolyFunc phi = yi(n - 1) * xpi(n - 1);
    for (int i = 1; i <= n - 2; ++i) phi += xi(i) * ypi(i);
    out.cocycles.push_back(
        {"S_" + std::to_string(2 * n - 2) + " cocycle", {s2n, phi}});
  }
  return out;
}

}  // namespace lcs
