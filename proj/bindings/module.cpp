#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <tuple>
#include <vector>

#include "ptmrad/ptm.hpp"
#include "ptmrad/recurrence.hpp"
#include "ptmrad/sidelobe.hpp"
#include "ptmrad/weights.hpp"

namespace py = pybind11;
using namespace ptmrad;

namespace pybind11 ::detail {

// mpz_class <-> python int, via decimal strings (both ends are arbitrary
// precision, so nothing is lost).
template <>
struct type_caster<mpz_class> {
public:
    PYBIND11_TYPE_CASTER(mpz_class, const_name("int"));

    bool load(handle src, bool) {
        if (!PyLong_Check(src.ptr())) return false;
        value = mpz_class(py::str(src).cast<std::string>(), 10);
        return true;
    }

    static handle cast(const mpz_class& v, return_value_policy, handle) {
        return PyLong_FromString(v.get_str().c_str(), nullptr, 10);
    }
};

}  // namespace pybind11::detail

namespace {

ClassicGenerator generator_from_name(const std::string& name) {
    if (name == "digit_sum") return ClassicGenerator::digit_sum;
    if (name == "recurrence") return ClassicGenerator::recurrence;
    if (name == "append_negate") return ClassicGenerator::append_negate;
    if (name == "morphism") return ClassicGenerator::morphism;
    throw std::invalid_argument("unknown generator '" + name +
                                "' (digit_sum, recurrence, append_negate, morphism)");
}

WeightRange range_from_name(const std::string& name) {
    if (name == "half") return WeightRange::half;
    if (name == "full") return WeightRange::full;
    throw std::invalid_argument("range must be 'half' or 'full'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Mod-p digit-sum sequences, sign-weight transforms, and exact identity checks";

    // digits
    m.def(
        "base_digits",
        [](std::uint64_t n, std::uint64_t base) { return base_digits(n, base).digits; },
        py::arg("n"), py::arg("base"), "Little-endian base-`base` digits of n");
    m.def(
        "digit_sum_mod",
        [](std::uint64_t n, int p) { return digit_sum_mod(n, Modulus(p)); }, py::arg("n"),
        py::arg("p"), "Sum of the base-p digits of n, mod p");
    m.def("xor_bitsum", &xor_bitsum, py::arg("x"), py::arg("y"));
    m.def(
        "xor_shift", [](std::uint32_t i, int r, int p) { return xor_shift(i, r, Modulus(p)); },
        py::arg("i"), py::arg("r"), py::arg("p"),
        "i XOR its p-bit cyclic left rotation by r");
    m.def("bit_length", &bit_length, py::arg("n"));

    // ptm
    py::class_<PtmSequence>(m, "PtmSequence")
        .def(py::init([](int p, std::vector<Int> gens) {
                 return PtmSequence(Modulus(p), std::move(gens));
             }),
             py::arg("p"), py::arg("generators"))
        .def_property_readonly("p", [](const PtmSequence& a) { return a.modulus().value(); })
        .def_property_readonly("generators",
                               [](const PtmSequence& a) { return a.generators(); })
        .def("term", &PtmSequence::term, py::arg("n"), "a_n = a_{v_p(n)}")
        .def("generator_sum", &PtmSequence::generator_sum);

    m.def("ptm_term", &ptm_term, py::arg("a"), py::arg("n"));
    m.def("classic_v", &classic_v, py::arg("n"));
    m.def("classic_w", &classic_w, py::arg("n"));
    m.def(
        "classic_prefix",
        [](const std::string& generator, std::size_t length) {
            return classic_prefix(generator_from_name(generator), length);
        },
        py::arg("generator"), py::arg("length"),
        "First terms of the classic sequence by the named construction");

    py::class_<PartitionBlocks>(m, "PartitionBlocks")
        .def_property_readonly("p", [](const PartitionBlocks& b) { return b.p.value(); })
        .def_readonly("M", &PartitionBlocks::M)
        .def_readonly("L", &PartitionBlocks::L)
        .def_readonly("blocks", &PartitionBlocks::blocks);

    m.def(
        "ptm_partition",
        [](int p, std::uint32_t M, std::uint64_t size_cap) {
            return ptm_partition(Modulus(p), M, size_cap);
        },
        py::arg("p"), py::arg("M"), py::arg("size_cap") = kDefaultSizeCap);
    m.def(
        "block_index", [](std::uint64_t n, int p) { return block_index(n, Modulus(p)); },
        py::arg("n"), py::arg("p"), "Streaming membership: the block of n is v_p(n)");

    py::class_<ProuhetSum>(m, "ProuhetSum")
        .def_readonly("m", &ProuhetSum::m)
        .def_readonly("value", &ProuhetSum::value)
        .def_readonly("all_blocks_equal", &ProuhetSum::all_blocks_equal);

    m.def("prouhet_sum", &prouhet_sum, py::arg("blocks"), py::arg("m"));
    m.def("moment_sum", &moment_sum, py::arg("a"), py::arg("M"), py::arg("m"),
          py::arg("size_cap") = kDefaultSizeCap);

    // weights
    m.def(
        "weight", [](std::uint32_t i, std::uint64_t n, int p) { return weight(i, n, Modulus(p)); },
        py::arg("i"), py::arg("n"), py::arg("p"));
    m.def(
        "weight_vector",
        [](int n, int p, const std::string& range) {
            return weight_vector(n, Modulus(p), range_from_name(range));
        },
        py::arg("n"), py::arg("p"), py::arg("range") = "half");
    m.def(
        "weight_table",
        [](int p) {
            const Modulus mod(p);
            const WeightTable table(mod);
            std::vector<std::vector<int>> rows(mod.weight_count(), std::vector<int>(p));
            for (std::uint32_t i = 0; i < mod.weight_count(); ++i)
                for (int n = 0; n < p; ++n) rows[i][n] = table.at(i, n);
            return rows;
        },
        py::arg("p"), "The 2^p x p table of w_i(n)");

    py::class_<CoefficientVector>(m, "CoefficientVector")
        .def_property_readonly("p", [](const CoefficientVector& c) { return c.p.value(); })
        .def_readonly("B", &CoefficientVector::B);

    m.def("rademacher_coeffs", &rademacher_coeffs, py::arg("a"));
    m.def("reconstruct", &reconstruct, py::arg("coeffs"), py::arg("n"));
    m.def(
        "walsh_weight",
        [](std::uint32_t i, std::uint32_t mask, int p) { return walsh_weight(i, mask, Modulus(p)); },
        py::arg("i"), py::arg("m"), py::arg("p"));
    m.def(
        "walsh_sum", [](std::uint32_t mask, int p) { return walsh_sum(mask, Modulus(p)); },
        py::arg("m"), py::arg("p"));
    m.def(
        "walsh_sum_half_range",
        [](std::uint32_t mask, int p) { return walsh_sum_half_range(mask, Modulus(p)); },
        py::arg("m"), py::arg("p"));
    m.def("walsh_project", &walsh_project, py::arg("coeffs"), py::arg("m"));
    m.def("rademacher_phi", &rademacher_phi, py::arg("n"), py::arg("num"), py::arg("den"),
          "phi_n at the dyadic point num/den");

    // recurrence
    m.def(
        "exponent", [](std::uint32_t i, std::uint64_t n, int p) { return exponent(i, n, Modulus(p)); },
        py::arg("i"), py::arg("n"), py::arg("p"));

    py::class_<ExponentShiftReport>(m, "ExponentShiftReport")
        .def_readonly("direct_bit", &ExponentShiftReport::direct_bit)
        .def_readonly("branch_bit", &ExponentShiftReport::branch_bit)
        .def_readonly("lhs_bit", &ExponentShiftReport::lhs_bit)
        .def_readonly("rhs_bit", &ExponentShiftReport::rhs_bit)
        .def_readonly("branch_matches", &ExponentShiftReport::branch_matches)
        .def_readonly("congruence_holds", &ExponentShiftReport::congruence_holds);

    m.def(
        "exponent_shift_check",
        [](std::uint32_t i, std::uint64_t n, int r, int p) {
            return exponent_shift_check(i, n, r, Modulus(p));
        },
        py::arg("i"), py::arg("n"), py::arg("r"), py::arg("p"));
    m.def(
        "weight_recursive",
        [](std::uint32_t i, std::uint64_t n, int p) { return weight_recursive(i, n, Modulus(p)); },
        py::arg("i"), py::arg("n"), py::arg("p"));
    m.def(
        "recurrence_table",
        [](int p) {
            std::vector<std::tuple<std::uint32_t, int, std::uint32_t>> out;
            for (const auto& rule : recurrence_table(Modulus(p)))
                out.emplace_back(rule.i, rule.r, rule.companion);
            return out;
        },
        py::arg("p"), "(i, r, x_r(i)) triples");

    // sidelobe
    py::class_<SidelobeMomentRecord>(m, "SidelobeMomentRecord")
        .def_readonly("m", &SidelobeMomentRecord::m)
        .def_readonly("prouhet", &SidelobeMomentRecord::prouhet)
        .def_readonly("coefficient", &SidelobeMomentRecord::coefficient)
        .def_readonly("lhs", &SidelobeMomentRecord::lhs)
        .def_readonly("rhs", &SidelobeMomentRecord::rhs)
        .def_readonly("equal", &SidelobeMomentRecord::equal);

    py::class_<SidelobeReport>(m, "SidelobeReport")
        .def_property_readonly("p", [](const SidelobeReport& r) { return r.p.value(); })
        .def_readonly("M", &SidelobeReport::M)
        .def_readonly("L", &SidelobeReport::L)
        .def_readonly("b0", &SidelobeReport::b0)
        .def_readonly("records", &SidelobeReport::records)
        .def_readonly("all_equal", &SidelobeReport::all_equal);

    m.def("sidelobe_term", &sidelobe_term, py::arg("a"), py::arg("n"));
    m.def("sidelobe_moments", &sidelobe_moments, py::arg("a"), py::arg("M"),
          py::arg("size_cap") = kDefaultSizeCap);

    m.attr("MAX_MODULUS") = kMaxModulus;
    m.attr("DEFAULT_SIZE_CAP") = kDefaultSizeCap;
    m.attr("__version__") = "0.1.0";
}
