// neronlab: local reduction data of elliptic curves over F_q(t), twist and
// Frobenius constructions, Swan-conductor arithmetic, and the built-in
// verification tables.

#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "neron/groupscheme.hpp"
#include "neron/localred.hpp"
#include "neron/parse.hpp"
#include "neron/ramify.hpp"
#include "neron/registry.hpp"
#include "neron/torsion.hpp"

using json = nlohmann::json;
using namespace neron;

namespace {

struct CurveArgs {
    long charac = 0;
    int field_deg = 1;
    std::string eq;
    std::string place = "0";

    void attach(CLI::App* cmd, bool with_place = true) {
        cmd->add_option("--char", charac, "field characteristic (prime)")->required();
        cmd->add_option("--field-deg", field_deg, "constant field degree over F_p");
        cmd->add_option("--eq", eq, "equation literal [a1,a2,a3,a4,a6]")->required();
        if (with_place) cmd->add_option("--place", place, "place: 0, inf, or an element");
    }

    Field field() const { return FqField::extension(charac, field_deg); }
    WeierstrassEq curve(const Field& F) const {
        EqLiteral lit = parse_equation(eq, F);
        return WeierstrassEq::make(lit.a1, lit.a2, lit.a3, lit.a4, lit.a6);
    }
};

json reduction_json(const ReductionData& rd) {
    json out;
    out["kodaira"] = rd.kodaira.str();
    out["nu_delta"] = rd.nu_delta;
    out["m"] = rd.m;
    out["f"] = rd.f;
    out["delta"] = rd.delta;
    out["phi"] = rd.phi_order;
    out["phi_structure"] = rd.phi_structure;
    out["restarts"] = rd.restarts;
    out["ext_degree"] = rd.ext_degree;
    out["minimal_eq"] = rd.minimal_eq.str();
    return out;
}

void emit(const json& out, bool as_json) {
    if (as_json) {
        std::cout << out.dump(2) << "\n";
        return;
    }
    for (auto it = out.begin(); it != out.end(); ++it)
        std::cout << it.key() << ": "
                  << (it.value().is_string() ? it.value().get<std::string>() : it.value().dump())
                  << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"local reduction data of elliptic curves over function fields"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "JSON output");

    CurveArgs reduce_args, twist_args, frob_args, base_args, torsion_args;

    CLI::App* reduce = app.add_subcommand("reduce", "Kodaira type and conductor data at a place");
    reduce_args.attach(reduce);

    CLI::App* twist = app.add_subcommand("twist", "quadratic / cubic / sextic / quartic twists");
    twist_args.attach(twist, false);
    std::string twist_kind = "quadratic", twist_param = "t";
    twist->add_option("--kind", twist_kind, "quadratic|quadratic-as|cubic|sextic|quartic");
    twist->add_option("--d", twist_param, "twist parameter (rational function)");

    CLI::App* frob = app.add_subcommand("frobenius", "coefficientwise p-th power pullback");
    frob_args.attach(frob, false);

    CLI::App* basech = app.add_subcommand("basechange", "compose coefficients with t = g(t)");
    base_args.attach(basech, false);
    std::string sub_expr;
    basech->add_option("--sub", sub_expr, "substitution g, e.g. t^2/(1+t)")->required();

    CLI::App* torsion = app.add_subcommand("torsion", "p-torsion specialization report");
    torsion_args.attach(torsion);

    CLI::App* swan = app.add_subcommand("swan", "Swan conductor from a wild filtration");
    std::string group_name = "sl2f3", subgroup_name = "full";
    int swan_s = 1;
    long swan_g = 6;
    swan->add_option("--group", group_name, "sl2f3 or gl2f2");
    swan->add_option("--subgroup", subgroup_name, "full|C6|Q|C4|C3|C2|1 (sl2f3 only)");
    swan->add_option("--s", swan_s, "filtration parameter (order 24 s)");
    swan->add_option("--g", swan_g, "abstract group order for gl2f2");

    CLI::App* phi = app.add_subcommand("phi", "Hasse-Herbrand function value");
    std::string orders_csv, x_str = "1";
    phi->add_option("--orders", orders_csv, "comma-separated g_0,g_1,...")->required();
    phi->add_option("--x", x_str, "evaluation point (rational, e.g. 3/2)");

    CLI::App* gs = app.add_subcommand("groupscheme", "order-p group scheme kernels");
    gs->require_subcommand(1);
    CLI::App* gs_axioms = gs->add_subcommand("axioms", "check the star composition axioms");
    long gs_p = 3;
    std::string gs_tau = "1";
    gs_axioms->add_option("--p", gs_p, "prime")->required();
    gs_axioms->add_option("--tau", gs_tau, "twist parameter in F_p (or 'g')");
    CLI::App* gs_h1 = gs->add_subcommand("h1count", "free-orbit count of irreducibles");
    long h1_p = 3, h1_q = 3;
    int h1_bound = 1;
    gs_h1->add_option("--p", h1_p, "prime")->required();
    gs_h1->add_option("--q", h1_q, "constant field size")->required();
    gs_h1->add_option("--bound", h1_bound, "degree bound")->required();

    CLI::App* ver = app.add_subcommand("verify", "run the verification tables");
    std::string table = "all";
    unsigned long seed = 12345;
    ver->add_option("--table", table, "table id or 'all'");
    ver->add_option("--seed", seed, "seed for the randomized suites");

    for (CLI::App* sc : app.get_subcommands([](const CLI::App*) { return true; })) {
        sc->fallthrough();
        for (CLI::App* nested : sc->get_subcommands([](const CLI::App*) { return true; }))
            nested->fallthrough();
    }

    CLI11_PARSE(app, argc, argv);

    try {
        if (*reduce) {
            Field F = reduce_args.field();
            ReductionData rd =
                tate_reduce(reduce_args.curve(F), parse_place(reduce_args.place, F));
            emit(reduction_json(rd), as_json);
            return 0;
        }
        if (*twist) {
            Field F = twist_args.field();
            WeierstrassEq E = twist_args.curve(F);
            RatFunc d = parse_ratfunc(twist_param, F);
            WeierstrassEq T = [&] {
                if (twist_kind == "quadratic") return twist_quadratic(E, d);
                if (twist_kind == "quadratic-as") return twist_quadratic_as(E, d);
                if (twist_kind == "cubic") return twist_higher(E, HigherTwist::Cubic, d);
                if (twist_kind == "sextic") return twist_higher(E, HigherTwist::Sextic, d);
                if (twist_kind == "quartic") return twist_higher(E, HigherTwist::Quartic, d);
                throw DomainError("unknown twist kind: " + twist_kind);
            }();
            emit(json{{"eq", T.str()}}, as_json);
            return 0;
        }
        if (*frob) {
            Field F = frob_args.field();
            emit(json{{"eq", frobenius_pullback(frob_args.curve(F)).str()}}, as_json);
            return 0;
        }
        if (*basech) {
            Field F = base_args.field();
            RatFunc g = parse_ratfunc(sub_expr, F);
            emit(json{{"eq", base_change(base_args.curve(F), g).str()}}, as_json);
            return 0;
        }
        if (*torsion) {
            Field F = torsion_args.field();
            WeierstrassEq E = torsion_args.curve(F);
            Place v = parse_place(torsion_args.place, F);
            std::optional<SpecializationReport> rep;
            if (F->p() == 3)
                rep = special_form_3(E, v);
            else if (F->p() == 2)
                rep = special_form_2(E, v);
            else
                throw DomainError("torsion specialization forms exist for p = 2, 3 only");
            json out;
            if (!rep) {
                out["match"] = false;
            } else {
                out["match"] = true;
                out["point"] = rep->point.str();
                out["order"] = rep->order;
                out["nonzero_in_fiber"] = rep->nonzero_in_fiber;
                out["nonzero_in_phi"] = rep->nonzero_in_phi;
            }
            emit(out, as_json);
            return 0;
        }
        if (*swan) {
            long delta = 0;
            if (group_name == "sl2f3") {
                MatrixGroup G = sl2f3_wild_group(swan_s);
                delta = (subgroup_name == "full" || subgroup_name == "SL2F3")
                            ? swan_delta(G)
                            : subgroup_swan(G, named_subgroup_sl2f3(subgroup_name));
            } else if (group_name == "gl2f2") {
                delta = swan_delta(gl2f2_wild_group(swan_g));
            } else {
                throw DomainError("unknown group: " + group_name);
            }
            emit(json{{"delta", delta}}, as_json);
            return 0;
        }
        if (*phi) {
            std::vector<long> orders;
            std::size_t pos = 0;
            while (pos < orders_csv.size()) {
                std::size_t comma = orders_csv.find(',', pos);
                if (comma == std::string::npos) comma = orders_csv.size();
                orders.push_back(std::stol(orders_csv.substr(pos, comma - pos)));
                pos = comma + 1;
            }
            Rat val = hasse_herbrand_phi(RamFiltration(orders), Rat::parse(x_str));
            emit(json{{"phi", val.str()}}, as_json);
            return 0;
        }
        if (*gs) {
            if (*gs_axioms) {
                Field F = FqField::prime(gs_p);
                Fq tau = gs_tau == "g" ? F->from_int(gs_p == 2 ? 1 : 2)
                                       : residue_at(parse_ratfunc(gs_tau, F), Place::origin(F));
                TruncRingPtr R = TruncRing::make(F, 3);
                TruncElem x = TruncElem::gen(R, 0), y = TruncElem::gen(R, 1),
                          z = TruncElem::gen(R, 2);
                auto star = [&](const TruncElem& a, const TruncElem& b) {
                    return oort_tate_add(a, b, tau);
                };
                bool assoc = star(star(x, y), z) == star(x, star(y, z));
                bool comm = star(x, y) == star(y, x);
                bool ident = star(x, TruncElem::zero(R)) == x;
                bool inv = star(x, oort_tate_multiple(x, gs_p - 1, tau)) == TruncElem::zero(R);
                bool pfold = oort_tate_multiple(x, gs_p, tau) == TruncElem::zero(R);
                json out{{"associative", assoc}, {"commutative", comm}, {"identity", ident},
                         {"inverses", inv},     {"p_fold_zero", pfold}};
                emit(out, as_json);
                return assoc && comm && ident && inv && pfold ? 0 : 1;
            }
            if (*gs_h1) {
                int deg = 1;
                long q = h1_q;
                while (q % h1_p == 0 && q > h1_p) {
                    q /= h1_p;
                    ++deg;
                }
                Field F = FqField::extension(h1_p, deg);
                if (F->size() != h1_q) throw DomainError("q must be a power of p");
                emit(json{{"count", h1_free_orbit_count(h1_p, F, h1_bound)}}, as_json);
                return 0;
            }
        }
        if (*ver) {
            std::vector<VerifyReport> reports;
            if (table == "all")
                reports = verify_all(seed);
            else
                reports.push_back(verify(table, seed));
            bool ok = true;
            json out = json::array();
            for (const VerifyReport& rep : reports) {
                ok = ok && rep.all_pass();
                if (as_json) {
                    json jr{{"table", rep.table},
                            {"passed", rep.passed()},
                            {"total", rep.total()}};
                    json fails = json::array();
                    for (const CaseResult& c : rep.cases)
                        if (!c.pass)
                            fails.push_back({{"id", c.id},
                                             {"computed", c.computed},
                                             {"expected", c.expected}});
                    jr["failures"] = fails;
                    out.push_back(jr);
                } else {
                    std::cout << rep.summary() << "\n";
                    for (const CaseResult& c : rep.cases)
                        if (!c.pass)
                            std::cout << "  FAIL " << c.id << ": computed " << c.computed
                                      << ", expected " << c.expected << "\n";
                }
            }
            if (as_json) std::cout << out.dump(2) << "\n";
            return ok ? 0 : 1;
        }
    } catch (const std::exception& e) {
        json err{{"error", e.what()}};
        if (as_json)
            std::cout << err.dump(2) << "\n";
        else
            std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
