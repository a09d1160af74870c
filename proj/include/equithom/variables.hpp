#pragma once

// Commuting coordinate variables of the coefficient ring:
//   z_1..z_l < zb_1..zb_l < X_11..X_ll < t_1..t_p
// (zb_i stands for the conjugate coordinate; conjugate Lie-algebra entries
// are never variables, Xb_ab is always rewritten as -X_ba.)
// A variable is packed into one integer so that the numeric order of the
// packed value is exactly the global variable order above.

#include <cstdint>
#include <stdexcept>
#include <string>

namespace equithom {

enum class VarKind : uint32_t { z = 0, zb = 1, X = 2, t = 3 };

using Var = uint32_t;

inline Var make_var(VarKind kind, unsigned a, unsigned b = 0)
{
	return (uint32_t(kind) << 20) | (a << 10) | b;
}

inline Var z_var(unsigned i) { return make_var(VarKind::z, i); }    // 1-based
inline Var zb_var(unsigned i) { return make_var(VarKind::zb, i); }  // 1-based
inline Var x_var(unsigned a, unsigned b) { return make_var(VarKind::X, a, b); }
inline Var t_var(unsigned nu) { return make_var(VarKind::t, nu); }

inline VarKind var_kind(Var v) { return VarKind(v >> 20); }
inline unsigned var_a(Var v) { return (v >> 10) & 0x3ff; }
inline unsigned var_b(Var v) { return v & 0x3ff; }

inline bool is_x_var(Var v) { return var_kind(v) == VarKind::X; }
inline bool is_t_var(Var v) { return var_kind(v) == VarKind::t; }

inline std::string var_name(Var v)
{
	switch (var_kind(v)) {
	case VarKind::z:
		return "z" + std::to_string(var_a(v));
	case VarKind::zb:
		return "zb" + std::to_string(var_a(v));
	case VarKind::X:
		return "X" + std::to_string(var_a(v)) + std::to_string(var_b(v));
	case VarKind::t:
		return "t" + std::to_string(var_a(v));
	}
	throw std::logic_error("var_name: bad kind");
}

Var var_from_name(const std::string &name);

} // namespace equithom
