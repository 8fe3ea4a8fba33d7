#include "iqh/json_io.hpp"

#include "iqh/errors.hpp"

namespace iqh {

Json to_json(const Rational& r) { return to_string(r); }

Json to_json(const Complex& z) { return Json::array({to_string(z.re), to_string(z.im)}); }

Json float_json(double value, double tol) { return Json{{"value", value}, {"tol", tol}}; }

Rational rational_from_json(const Json& j) {
  if (!j.is_string()) throw DataError("expected a rational string");
  return rational_from_string(j.get<std::string>());
}

Complex complex_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw DataError("expected a [re, im] pair");
  return Complex(rational_from_json(j[0]), rational_from_json(j[1]));
}

namespace {

FourVector four_vector_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 4) throw DataError("expected a 4-vector of rational strings");
  FourVector v;
  for (int i = 0; i < 4; ++i) v[i] = rational_from_json(j[i]);
  return v;
}

const Json& require_field(const Json& doc, const char* name) {
  auto it = doc.find(name);
  if (it == doc.end()) throw DataError(std::string("missing field '") + name + "'");
  return *it;
}

std::vector<Mode> modes_from_json(const Json& doc) {
  const Json& arr = require_field(doc, "modes");
  if (!arr.is_array() || arr.empty()) throw DataError("'modes' must be a non-empty array");
  std::vector<Mode> modes;
  for (const Json& rec : arr) {
    modes.push_back(Mode{four_vector_from_json(require_field(rec, "k")),
                         rational_from_json(require_field(rec, "w"))});
  }
  return modes;
}

}  // namespace

ModeSetPtr mode_set_from_json(const Json& doc) {
  std::string field = require_field(doc, "field").get<std::string>();
  if (field == "scalar") {
    Rational mass =
        doc.contains("mass") ? rational_from_json(doc["mass"]) : Rational(0);
    return ModeSet::scalar(std::move(mass), modes_from_json(doc));
  }
  if (field == "em") {
    return ModeSet::em(modes_from_json(doc));
  }
  throw DataError("'field' must be \"scalar\" or \"em\"");
}

FieldState field_state_from_json(const Json& doc) {
  ModeSetPtr modes = mode_set_from_json(doc);
  const Json& arr = doc["modes"];
  std::vector<Complex> amps(modes->slot_count());
  for (int m = 0; m < modes->mode_count(); ++m) {
    const Json& a = require_field(arr[m], "a");
    if (modes->kind() == FieldKind::Scalar) {
      amps[modes->slot(m, 0)] = complex_from_json(a);
    } else {
      if (!a.is_array() || a.size() != 4) throw DataError("EM amplitude must be 4 pairs");
      for (int mu = 0; mu < 4; ++mu) amps[modes->slot(m, mu)] = complex_from_json(a[mu]);
    }
  }
  return FieldState(std::move(modes), std::move(amps));
}

CurrentModes current_from_json(const Json& doc) {
  ModeSetPtr modes = mode_set_from_json(doc);
  if (modes->kind() != FieldKind::EM4) throw DataError("currents need an EM mode set");
  const Json& arr = doc["modes"];
  std::vector<Complex> comps(modes->slot_count());
  for (int m = 0; m < modes->mode_count(); ++m) {
    const Json& j = require_field(arr[m], "j");
    if (!j.is_array() || j.size() != 4) throw DataError("current must be 4 pairs per mode");
    for (int mu = 0; mu < 4; ++mu) comps[modes->slot(m, mu)] = complex_from_json(j[mu]);
  }
  return CurrentModes(std::move(modes), std::move(comps));
}

LinearObservable observable_from_json(const Json& arr, ModeSetPtr modes) {
  if (!arr.is_array()) throw DataError("observable must be an array of terms");
  LinearObservable obs;
  obs.modes = modes;
  for (const Json& rec : arr) {
    int mode = require_field(rec, "mode").get<int>();
    int component = rec.contains("component") ? rec["component"].get<int>() : 0;
    if (mode < 0 || mode >= modes->mode_count() || component < 0 ||
        component >= modes->components()) {
      throw DataError("observable term outside the mode set");
    }
    bool conjugated = rec.contains("conjugated") && rec["conjugated"].get<bool>();
    Complex coeff = rec.contains("coeff") ? complex_from_json(rec["coeff"]) : Complex(1);
    obs.terms.push_back(
        LinearObservable::Term{modes->slot(mode, component), conjugated, std::move(coeff)});
  }
  return obs;
}

HermitianMatrix matrix4_from_json(const Json& doc) {
  const Json& rows = require_field(doc, "m");
  if (!rows.is_array() || rows.size() != 4) throw DataError("'m' must be a 4x4 array");
  HermitianMatrix m(4);
  for (int i = 0; i < 4; ++i) {
    if (!rows[i].is_array() || rows[i].size() != 4) throw DataError("'m' must be a 4x4 array");
    for (int j = 0; j < 4; ++j) m.at(i, j) = complex_from_json(rows[i][j]);
  }
  return m;
}

}  // namespace iqh
