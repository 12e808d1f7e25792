// codual: batch workbench for finite-dimensional coalgebra dualities.
//
//   check     certify a structure file (exit 0 PASS, 1 FAIL, 2 bad input)
//   dual      apply the matching duality functor and emit the result
//   cotensor  dimension report for L cotensor_C M
//   cohom     compute h(M,N) and emit it as a contramodule
//   adjoint   verify the cotensor/cohom adjunction on (L, M, N)
//   random    emit a seeded certified structure
//   selftest  run the full randomized invariant suite (byte-stable per seed)

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "codual/cohom.hpp"
#include "codual/duality.hpp"
#include "codual/io.hpp"
#include "codual/selftest.hpp"

namespace fs = std::filesystem;
using namespace codual;

namespace {

struct Options {
    std::uint64_t seed = 0;
    std::string out;
    std::string format = "text";
    bool timing = false;
};

class StepTimer {
public:
    StepTimer(bool enabled, std::string label)
        : enabled_(enabled), label_(std::move(label)), start_(std::chrono::steady_clock::now()) {}
    ~StepTimer() {
        if (!enabled_) return;
        auto us = std::chrono::duration_cast<std::chrono::microseconds>(
                      std::chrono::steady_clock::now() - start_)
                      .count();
        std::cerr << "[timing] " << label_ << ": " << us << " us\n";
    }

private:
    bool enabled_;
    std::string label_;
    std::chrono::steady_clock::time_point start_;
};

void emit_output(const Options& opt, const std::string& text) {
    if (opt.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(opt.out);
    if (!f) throw ParseError("cannot write " + opt.out);
    f << text;
}

void emit_structure(const Options& opt, const json& j) { emit_output(opt, dump_canonical(j)); }

template <class Fn>
int dispatch_file(const std::string& path, Fn&& fn) {
    json j = load_json_file(path);
    if (!j.is_object() || !j.contains("field"))
        throw ParseError(path + ": structure file needs a \"field\"");
    FieldSpec spec = field_spec_from_json(j["field"]);
    return with_field(spec, [&](auto field) {
        auto s = structure_from_json(field, j, fs::path(path).parent_path());
        return fn(field, std::move(s));
    });
}

template <FieldType F>
std::string kind_of(const AnyStructure<F>& s) {
    static const char* names[] = {"coalgebra",    "algebra",      "comodule",
                                  "right_comodule", "contramodule", "left_module",
                                  "right_module", "bicomodule",   "tower"};
    return names[s.index()];
}

template <FieldType F>
CertReport<F> check_any(const F&, const AnyStructure<F>& s) {
    return std::visit(
        [](const auto& v) -> CertReport<F> {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Coalgebra<F>>) return check_coalgebra(v);
            else if constexpr (std::is_same_v<T, Algebra<F>>) return check_algebra(v);
            else if constexpr (std::is_same_v<T, Comodule<F>>) return check_comodule(v);
            else if constexpr (std::is_same_v<T, RightComodule<F>>) return check_right_comodule(v);
            else if constexpr (std::is_same_v<T, Contramodule<F>>) return check_contramodule(v);
            else if constexpr (std::is_same_v<T, LeftModuleFile<F>>) return check_left_module(v.module);
            else if constexpr (std::is_same_v<T, RightModuleFile<F>>) return check_right_module(v.module);
            else if constexpr (std::is_same_v<T, Bicomodule<F>>) return check_bicomodule(v);
            else return check_tower(v);
        },
        s);
}

template <FieldType F>
std::string render_report(const F& field, const Options& opt, const std::string& kind,
                          const CertReport<F>& r, const json& dims = json::object()) {
    if (opt.format == "json") {
        json j = report_to_json(field, r);
        j["format_version"] = 1;
        j["report"] = "check";
        j["kind"] = kind;
        if (!dims.empty()) j["dimensions"] = dims;
        return dump_canonical(j);
    }
    std::string out = kind + ":\n" + report_to_text(field, r);
    for (auto& [key, value] : dims.items()) out += key + " = " + value.dump() + "\n";
    return out;
}

int cmd_check(const Options& opt, const std::string& file) {
    return dispatch_file(file, [&](auto field, auto s) {
        StepTimer t(opt.timing, "check");
        auto report = check_any(field, s);
        emit_output(opt, render_report(field, opt, kind_of(s), report));
        return report.pass() ? 0 : 1;
    });
}

int cmd_dual(const Options& opt, const std::string& file) {
    return dispatch_file(file, [&](auto field, auto s) {
        using F = std::decay_t<decltype(field)>;
        StepTimer t(opt.timing, "dual");
        int failed = 0;
        json out;
        std::visit(
            [&](const auto& v) {
                using T = std::decay_t<decltype(v)>;
                if constexpr (std::is_same_v<T, Coalgebra<F>>) {
                    auto r = check_coalgebra(v);
                    if (!r.pass()) {
                        emit_output(opt, render_report(field, opt, "coalgebra", r));
                        failed = 1;
                        return;
                    }
                    out = to_json(dual_algebra(v));
                } else if constexpr (std::is_same_v<T, Algebra<F>>) {
                    auto r = check_algebra(v);
                    if (!r.pass()) {
                        emit_output(opt, render_report(field, opt, "algebra", r));
                        failed = 1;
                        return;
                    }
                    out = to_json(dual_coalgebra(v));
                } else if constexpr (std::is_same_v<T, Comodule<F>>) {
                    out = to_json(comodule_to_contramodule(v));
                } else if constexpr (std::is_same_v<T, Contramodule<F>>) {
                    out = to_json(contramodule_to_comodule(v));
                } else if constexpr (std::is_same_v<T, LeftModuleFile<F>>) {
                    if (!v.base_coalgebra)
                        throw StructureError("dual: left_module needs a coalgebra base");
                    out = to_json(pcmodule_to_comodule(v.module, *v.base_coalgebra));
                } else if constexpr (std::is_same_v<T, RightModuleFile<F>>) {
                    if (!v.base_coalgebra)
                        throw StructureError("dual: right_module needs a coalgebra base");
                    out = to_json(dmodule_to_contramodule(v.module, *v.base_coalgebra));
                } else {
                    throw StructureError("dual: no duality functor for kind " +
                                         std::string(kind_of(AnyStructure<F>(v))));
                }
            },
            s);
        if (failed) return failed;
        emit_structure(opt, out);
        return 0;
    });
}

int cmd_cotensor(const Options& opt, const std::string& file_l, const std::string& file_m) {
    return dispatch_file(file_l, [&](auto field, auto sl) {
        using F = std::decay_t<decltype(field)>;
        auto* l = std::get_if<RightComodule<F>>(&sl);
        if (!l) throw StructureError("cotensor: first argument must be a right_comodule");
        json jm = load_json_file(file_m);
        auto sm = structure_from_json(field, jm, fs::path(file_m).parent_path());
        StepTimer t(opt.timing, "cotensor");
        json dims;
        if (auto* m = std::get_if<Comodule<F>>(&sm)) {
            auto ct = cotensor(*l, *m);
            dims = json{{"ambient", l->dim * m->dim}, {"cotensor", ct.space.dim()}};
        } else if (auto* b = std::get_if<Bicomodule<F>>(&sm)) {
            auto ct = cotensor(*l, *b);
            dims = json{{"ambient", l->dim * b->dim},
                        {"cotensor", ct.space.dim()},
                        {"induced_over_dim", b->over_right.dim}};
        } else {
            throw StructureError("cotensor: second argument must be a comodule or bicomodule");
        }
        if (opt.format == "json") {
            emit_output(opt, dump_canonical(json{{"format_version", 1},
                                                 {"report", "cotensor"},
                                                 {"dimensions", dims},
                                                 {"pass", true}}));
        } else {
            std::string s = "cotensor:\n";
            for (auto& [k, v] : dims.items()) s += k + " = " + v.dump() + "\n";
            emit_output(opt, s);
        }
        return 0;
    });
}

int cmd_cohom(const Options& opt, const std::string& file_m, const std::string& file_n) {
    return dispatch_file(file_m, [&](auto field, auto sm) {
        using F = std::decay_t<decltype(field)>;
        auto* m = std::get_if<Bicomodule<F>>(&sm);
        if (!m) throw StructureError("cohom: first argument must be a bicomodule");
        json jn = load_json_file(file_n);
        auto sn = structure_from_json(field, jn, fs::path(file_n).parent_path());
        auto* n = std::get_if<Contramodule<F>>(&sn);
        if (!n) throw StructureError("cohom: second argument must be a contramodule");
        StepTimer t(opt.timing, "cohom");
        auto result = cohom(*m, *n);
        emit_structure(opt, to_json(result.contra));
        std::cerr << "cohom dimension = " << result.contra.dim << "\n";
        return 0;
    });
}

int cmd_adjoint(const Options& opt, const std::string& file_l, const std::string& file_m,
                const std::string& file_n) {
    return dispatch_file(file_l, [&](auto field, auto sl) {
        using F = std::decay_t<decltype(field)>;
        auto* l = std::get_if<RightComodule<F>>(&sl);
        if (!l) throw StructureError("adjoint: first argument must be a right_comodule");
        auto sm = structure_from_json(field, load_json_file(file_m), fs::path(file_m).parent_path());
        auto* m = std::get_if<Bicomodule<F>>(&sm);
        if (!m) throw StructureError("adjoint: second argument must be a bicomodule");
        auto sn = structure_from_json(field, load_json_file(file_n), fs::path(file_n).parent_path());
        auto* n = std::get_if<Contramodule<F>>(&sn);
        if (!n) throw StructureError("adjoint: third argument must be a contramodule");
        StepTimer t(opt.timing, "adjoint");
        auto report = adjunction_check(*l, *m, *n);
        json j{{"format_version", 1},
               {"report", "adjoint"},
               {"pass", report.pass()},
               {"dimensions",
                json{{"hom_into_cotensor", report.lhs_dim}, {"hom_from_cohom", report.rhs_dim}}},
               {"bijective", report.bijective}};
        if (!report.detail.empty()) j["detail"] = report.detail;
        if (opt.format == "json") {
            emit_output(opt, dump_canonical(j));
        } else {
            std::string s = "adjunction: ";
            s += report.pass() ? "PASS" : "FAIL";
            s += "\nhom(N, L cotensor M) dim = " + std::to_string(report.lhs_dim);
            s += "\nhom(h(M,N), L) dim = " + std::to_string(report.rhs_dim);
            s += std::string("\nbijective = ") + (report.bijective ? "yes" : "no") + "\n";
            if (!report.detail.empty()) s += report.detail + "\n";
            emit_output(opt, s);
        }
        return report.pass() ? 0 : 1;
    });
}

struct RandomParams {
    std::string kind;
    std::string field = "Q";
    std::string builder = "grouplike";
    std::size_t n = 2;
    std::string over;
    std::string over_right;
    std::size_t levels = 3;
};

FieldSpec parse_field_flag(const std::string& s) {
    if (s == "Q") return FieldSpec{FieldSpec::Kind::rationals, 0};
    if (s.rfind("GF:", 0) == 0) {
        std::uint64_t p = std::stoull(s.substr(3));
        return FieldSpec{FieldSpec::Kind::prime_field, p};
    }
    throw ParseError("--field expects Q or GF:<prime>");
}

template <FieldType F>
Coalgebra<F> load_coalgebra_arg(const F& field, const std::string& path, const char* who) {
    auto s = structure_from_json(field, load_json_file(path), fs::path(path).parent_path());
    if (auto* c = std::get_if<Coalgebra<F>>(&s)) return *c;
    throw StructureError(std::string(who) + ": expected a coalgebra file");
}

int cmd_random(const Options& opt, const RandomParams& p) {
    FieldSpec spec = parse_field_flag(p.field);
    return with_field(spec, [&](auto field) {
        using F = std::decay_t<decltype(field)>;
        SplitMix64 rng(opt.seed);
        json out;
        if (p.kind == "coalgebra") {
            Coalgebra<F> c{field, 0, Matrix<F>(field, 0, 0), Matrix<F>(field, 0, 0)};
            if (p.builder == "grouplike") c = grouplike(field, p.n);
            else if (p.builder == "matrix") c = matrix_coalgebra(field, p.n);
            else if (p.builder == "divided_power") c = divided_power(field, p.n);
            else if (p.builder == "trig") c = trig(field);
            else if (p.builder == "zoo") {
                auto zoo = coalgebra_zoo(field);
                c = zoo[rng.below(zoo.size())];
            } else throw ParseError("unknown builder \"" + p.builder + "\"");
            if (c.dim > 0) {
                auto [g, g_inv] = random_invertible(field, c.dim, rng);
                c = conjugate(c, g, g_inv);
            }
            out = to_json(c);
        } else if (p.kind == "algebra") {
            out = to_json(dual_algebra(grouplike(field, p.n)));
        } else {
            if (p.over.empty()) throw ParseError("random " + p.kind + " needs --over <coalgebra file>");
            auto c = load_coalgebra_arg(field, p.over, "random");
            if (p.kind == "comodule") out = to_json(random_comodule(c, rng, p.n));
            else if (p.kind == "right_comodule") out = to_json(random_right_comodule(c, rng, p.n));
            else if (p.kind == "contramodule") out = to_json(random_contramodule(c, rng, p.n));
            else if (p.kind == "left_module")
                out = to_json(LeftModuleFile<F>{random_left_module(c, rng, p.n), c});
            else if (p.kind == "right_module")
                out = to_json(RightModuleFile<F>{random_right_module(c, rng, p.n), c});
            else if (p.kind == "bicomodule") {
                if (p.over_right.empty()) throw ParseError("random bicomodule needs --over-right");
                auto d = load_coalgebra_arg(field, p.over_right, "random");
                out = to_json(random_bicomodule(c, d, rng, std::max<std::size_t>(1, p.n)));
            } else if (p.kind == "tower") {
                FiniteTower<F> t{c, {}, {}};
                auto top = random_contramodule(c, rng, p.n);
                t.levels.assign(1, top);
                for (std::size_t s = 1; s < std::max<std::size_t>(1, p.levels); ++s) {
                    auto [g, g_inv] = random_invertible(field, top.dim, rng);
                    t.levels.insert(t.levels.begin(), conjugate(t.levels.front(), g, g_inv));
                    t.transitions.insert(t.transitions.begin(), g);
                }
                out = to_json(t);
            } else {
                throw ParseError("unknown kind \"" + p.kind + "\"");
            }
        }
        emit_structure(opt, out);
        return 0;
    });
}

int cmd_selftest(const Options& opt, std::size_t count) {
    StepTimer t(opt.timing, "selftest");
    RatField q;
    PrimeField f5(5);
    auto rq = run_selftest(q, opt.seed, count);
    auto r5 = run_selftest(f5, opt.seed, count);
    SelftestResult all;
    all.suites = rq.suites;
    all.suites.insert(all.suites.end(), r5.suites.begin(), r5.suites.end());

    if (opt.format == "json") {
        json suites = json::array();
        for (const auto& s : all.suites)
            suites.push_back(json{{"name", s.name}, {"passed", s.passed}, {"total", s.total}});
        emit_output(opt, dump_canonical(json{{"format_version", 1},
                                             {"report", "selftest"},
                                             {"rng", SplitMix64::algorithm},
                                             {"seed", opt.seed},
                                             {"count", count},
                                             {"pass", all.pass()},
                                             {"suites", suites}}));
    } else {
        std::string text = "selftest rng=" + std::string(SplitMix64::algorithm) +
                           " seed=" + std::to_string(opt.seed) + " count=" + std::to_string(count) +
                           "\n";
        for (const auto& s : all.suites)
            text += s.name + ": " + std::to_string(s.passed) + "/" + std::to_string(s.total) +
                    (s.passed == s.total ? " PASS" : " FAIL") + "\n";
        text += all.pass() ? "ALL PASS\n" : "FAILURES PRESENT\n";
        emit_output(opt, text);
    }
    return all.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact workbench for finite-dimensional coalgebra dualities"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    app.add_option("--seed", opt.seed, "PRNG seed (splitmix64)");
    app.add_option("--out", opt.out, "write output to a file instead of stdout");
    app.add_option("--format", opt.format, "report format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_flag("--timing", opt.timing, "print wall-clock per step to stderr");

    std::string file_a, file_b, file_c;
    auto* check = app.add_subcommand("check", "certify a structure file");
    check->add_option("file", file_a)->required();
    auto* dual = app.add_subcommand("dual", "apply the matching duality functor");
    dual->add_option("file", file_a)->required();
    auto* cotensor_cmd = app.add_subcommand("cotensor", "L cotensor_C M dimension report");
    cotensor_cmd->add_option("L", file_a)->required();
    cotensor_cmd->add_option("M", file_b)->required();
    auto* cohom_cmd = app.add_subcommand("cohom", "compute h(M,N)");
    cohom_cmd->add_option("M", file_a)->required();
    cohom_cmd->add_option("N", file_b)->required();
    auto* adjoint = app.add_subcommand("adjoint", "verify the adjunction on (L,M,N)");
    adjoint->add_option("L", file_a)->required();
    adjoint->add_option("M", file_b)->required();
    adjoint->add_option("N", file_c)->required();

    RandomParams rp;
    auto* random_cmd = app.add_subcommand("random", "emit a seeded certified structure");
    random_cmd->add_option("kind", rp.kind)->required();
    random_cmd->add_option("--field", rp.field, "Q or GF:<prime>");
    random_cmd->add_option("--builder", rp.builder, "grouplike|matrix|divided_power|trig|zoo");
    random_cmd->add_option("--n", rp.n, "builder size / copy count");
    random_cmd->add_option("--over", rp.over, "base coalgebra file");
    random_cmd->add_option("--over-right", rp.over_right, "right base coalgebra (bicomodule)");
    random_cmd->add_option("--levels", rp.levels, "tower length");

    std::size_t count = 25;
    auto* selftest = app.add_subcommand("selftest", "run the randomized invariant suite");
    selftest->add_option("--count", count, "instances per suite");

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed()) return cmd_check(opt, file_a);
        if (dual->parsed()) return cmd_dual(opt, file_a);
        if (cotensor_cmd->parsed()) return cmd_cotensor(opt, file_a, file_b);
        if (cohom_cmd->parsed()) return cmd_cohom(opt, file_a, file_b);
        if (adjoint->parsed()) return cmd_adjoint(opt, file_a, file_b, file_c);
        if (random_cmd->parsed()) return cmd_random(opt, rp);
        if (selftest->parsed()) return cmd_selftest(opt, count);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const StructureError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const FieldError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const PreconditionError& e) {
        std::cerr << "fail: " << e.what() << "\n";
        return 1;
    } catch (const InternalInvariantError& e) {
        std::cerr << "internal invariant violated: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
