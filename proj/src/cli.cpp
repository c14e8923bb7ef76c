#include "widecat/cli.hpp"

#include "widecat/classify.hpp"
#include "widecat/homology.hpp"
#include "widecat/quiver.hpp"
#include "widecat/reps.hpp"
#include "widecat/tuples.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <thread>

namespace widecat {

namespace {

std::uint32_t default_field_char()
{
    if (const char* env = std::getenv("WIDECAT_FIELD")) {
        try {
            const unsigned long v = std::stoul(env);
            if (v >= 2 && v < (1ul << 31) && is_prime_u32(static_cast<std::uint32_t>(v)))
                return static_cast<std::uint32_t>(v);
        } catch (const std::exception&) {
        }
        throw CLI::ValidationError("WIDECAT_FIELD", "must be a prime below 2^31");
    }
    return kDefaultFieldChar;
}

void require_prime(std::uint32_t p)
{
    if (!is_prime_u32(p) || p >= (std::uint32_t{1} << 31))
        throw CLI::ValidationError("--field", "must be a prime below 2^31");
}

nlohmann::ordered_json collection_json(const Collection& c)
{
    auto arr = nlohmann::ordered_json::array();
    for (const AdmissibleSet& s : c.members)
        arr.push_back(s.members);
    return arr;
}

std::string tuple_group(const std::vector<IncTuple>& zs)
{
    if (zs.empty())
        return "0";
    std::string out;
    for (std::size_t i = 0; i < zs.size(); ++i) {
        if (i)
            out += '+';
        out += "(" + format_tuple(zs[i]) + ")";
    }
    return out;
}

std::string complex_plain(const RepComplex& c)
{
    std::string out = "0";
    for (const auto& term : c.terms)
        out += " -> " + tuple_group(term);
    out += " -> 0";
    return out;
}

struct VerifyReport {
    std::uint64_t modules = 0, bad_modules = 0;
    std::uint64_t hom_pairs = 0, hom_mismatches = 0;
    std::uint64_t ext_pairs = 0, ext_mismatches = 0;
    std::uint64_t vanishing_checks = 0, vanishing_violations = 0;
    std::uint64_t sequences = 0, sequence_failures = 0;
    std::uint64_t resolutions = 0, resolution_failures = 0;

    bool ok() const
    {
        return bad_modules == 0 && hom_mismatches == 0 && ext_mismatches == 0 &&
               vanishing_violations == 0 && sequence_failures == 0 && resolution_failures == 0;
    }
};

bool complex_is_exact(const RepComplex& c)
{
    try {
        const auto h = complex_homology_dims(c);
        return std::all_of(h.begin(), h.end(), [](int v) { return v == 0; });
    } catch (const std::runtime_error&) {
        return false; // nonzero consecutive composite
    }
}

VerifyReport run_verify(Params params, std::uint32_t p, int jobs)
{
    const ModuleCategory cat(params, p);
    const auto tuples = generate_tuples(params.category_space());
    const std::size_t nt = tuples.size();

    VerifyReport rep;
    rep.modules = nt;
    for (const IncTuple& x : tuples)
        if (!build_module(cat, x).satisfies_relations())
            ++rep.bad_modules;

    struct Task {
        std::size_t i, j;
    };
    std::vector<Task> pairs;
    pairs.reserve(nt * nt);
    for (std::size_t i = 0; i < nt; ++i)
        for (std::size_t j = 0; j < nt; ++j)
            pairs.push_back({i, j});

    std::atomic<std::uint64_t> hom_bad{0}, ext_bad{0}, van_bad{0}, van_checks{0};
    const int workers = std::max(1, jobs);
    std::vector<std::thread> threads;
    const auto work = [&](std::size_t start) {
        for (std::size_t t = start; t < pairs.size(); t += static_cast<std::size_t>(workers)) {
            const IncTuple& x = tuples[pairs[t].i];
            const IncTuple& y = tuples[pairs[t].j];
            const int want_hom = e_hom(x, y) ? 1 : 0;
            if (hom_dim_oracle(cat, x, y) != want_hom)
                hom_bad.fetch_add(1);
            // dim Ext^d(M_y, M_x) = 1 iff x E_Ext y
            const int want_ext = e_ext(x, y) ? 1 : 0;
            if (ext_dim_oracle(cat, y, x, params.d) != want_ext)
                ext_bad.fetch_add(1);
            for (int deg = 1; deg < params.d; ++deg) {
                van_checks.fetch_add(1);
                if (ext_dim_oracle(cat, y, x, deg) != 0)
                    van_bad.fetch_add(1);
            }
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        for (int w = 0; w < workers; ++w)
            threads.emplace_back(work, static_cast<std::size_t>(w));
        for (auto& th : threads)
            th.join();
    }
    rep.hom_pairs = rep.ext_pairs = pairs.size();
    rep.hom_mismatches = hom_bad.load();
    rep.ext_mismatches = ext_bad.load();
    rep.vanishing_checks = van_checks.load();
    rep.vanishing_violations = van_bad.load();

    for (const IncTuple& x : tuples) {
        for (const IncTuple& y : tuples) {
            if (!e_ext(x, y))
                continue;
            ++rep.sequences;
            if (!complex_is_exact(ext_sequence(cat, x, y)))
                ++rep.sequence_failures;
        }
        if (x[0] > 1) {
            ++rep.resolutions;
            if (!complex_is_exact(resolution(cat, x, 1)))
                ++rep.resolution_failures;
        }
    }
    return rep;
}

std::vector<IncTuple> parse_tuple_args(const std::vector<std::string>& args, TupleSpace space)
{
    std::vector<IncTuple> out;
    out.reserve(args.size());
    for (const std::string& a : args)
        out.push_back(parse_tuple(a, space));
    return out;
}

} // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"combinatorial model of the d-cluster tilting categories of higher "
                 "Auslander algebras of type A"};
    app.require_subcommand(1);

    int n = 1, d = 1;
    std::string format = "plain";
    std::uint32_t field = 0; // 0: use env/default
    int jobs = 1;
    double budget_secs = 0; // 0: none
    std::uint64_t cap = 1000000;
    std::vector<std::string> tuple_args;

    const auto add_nd = [&](CLI::App* sub) {
        sub->add_option("n", n, "rank")->required()->check(CLI::PositiveNumber);
        sub->add_option("d", d, "homological dimension")->required()->check(CLI::PositiveNumber);
    };
    const auto add_field = [&](CLI::App* sub) {
        sub->add_option("--field", field, "prime field characteristic");
    };
    const auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"plain", "json", "tsv", "dot"}));
    };

    CLI::App* sc_vertices = app.add_subcommand("vertices", "list the tuples indexing the indecomposables");
    add_nd(sc_vertices);
    add_format(sc_vertices);

    CLI::App* sc_quiver = app.add_subcommand("quiver", "emit the quiver presentation");
    add_nd(sc_quiver);
    add_format(sc_quiver);
    bool quiver_dot = false, quiver_json = false, module_level = false;
    sc_quiver->add_flag("--dot", quiver_dot, "DOT output");
    sc_quiver->add_flag("--json", quiver_json, "JSON output (default)");
    sc_quiver->add_flag("--module-level", module_level, "use the module-level quiver (m = d-1)");

    CLI::App* sc_module = app.add_subcommand("module", "describe the indecomposable for a tuple");
    add_nd(sc_module);
    add_field(sc_module);
    add_format(sc_module);
    std::string arg_x, arg_y;
    sc_module->add_option("X", arg_x, "tuple, e.g. 2,4,6")->required();

    CLI::App* sc_hom = app.add_subcommand("hom", "dim Hom(M_X, M_Y)");
    add_nd(sc_hom);
    add_field(sc_hom);
    bool use_oracle = false;
    sc_hom->add_option("X", arg_x)->required();
    sc_hom->add_option("Y", arg_y)->required();
    sc_hom->add_flag("--oracle", use_oracle, "solve the commutation equations instead of the formula");

    CLI::App* sc_ext = app.add_subcommand("ext", "dim Ext^i(M_X, M_Y)");
    add_nd(sc_ext);
    add_field(sc_ext);
    int degree = -1;
    sc_ext->add_option("X", arg_x)->required();
    sc_ext->add_option("Y", arg_y)->required();
    sc_ext->add_flag("--oracle", use_oracle, "compute from the projective resolution");
    sc_ext->add_option("--degree", degree, "Ext degree (default d)");

    CLI::App* sc_sequence = app.add_subcommand("sequence", "exact sequence attached to an E_Ext pair");
    add_nd(sc_sequence);
    add_field(sc_sequence);
    add_format(sc_sequence);
    sc_sequence->add_option("X", arg_x)->required();
    sc_sequence->add_option("Y", arg_y)->required();

    CLI::App* sc_resolution = app.add_subcommand("resolution", "s-shifted resolution of M_X");
    add_nd(sc_resolution);
    add_field(sc_resolution);
    add_format(sc_resolution);
    int shift_s = 1;
    sc_resolution->add_option("X", arg_x)->required();
    sc_resolution->add_option("--s", shift_s, "shift (default 1: minimal projective resolution)");

    CLI::App* sc_closure = app.add_subcommand("closure", "wide closure of a set of indecomposables");
    add_nd(sc_closure);
    add_format(sc_closure);
    sc_closure->add_option("tuples", tuple_args, "tuples X1 X2 ...");

    CLI::App* sc_recognize = app.add_subcommand("recognize", "collection generating the given tuples, if wide");
    add_nd(sc_recognize);
    add_format(sc_recognize);
    sc_recognize->add_option("tuples", tuple_args, "tuples X1 X2 ...");

    CLI::App* sc_count = app.add_subcommand("count", "number of wide subcategories w_{n,d}");
    add_nd(sc_count);
    add_format(sc_count);
    bool stats = false;
    sc_count->add_option("--budget-secs", budget_secs, "abort when exceeded (exit 3)");
    sc_count->add_option("--jobs", jobs, "parallel branch workers")->check(CLI::PositiveNumber);
    sc_count->add_flag("--stats", stats, "include nodes/seconds in JSON output (non-reproducible)");

    CLI::App* sc_enumerate = app.add_subcommand("enumerate", "list all non-interlacing collections");
    add_nd(sc_enumerate);
    add_format(sc_enumerate);
    sc_enumerate->add_option("--cap", cap, "maximum number of collections (exit 3 when exceeded)");

    CLI::App* sc_verify = app.add_subcommand("verify", "oracle/formula grids and exactness checks");
    add_nd(sc_verify);
    add_field(sc_verify);
    sc_verify->add_option("--jobs", jobs, "parallel grid workers")->check(CLI::PositiveNumber);

    CLI::App* sc_table = app.add_subcommand("table", "table of w_{n,d} values");
    int nmax = 4, dmax = 4;
    sc_table->add_option("--nmax", nmax, "largest n")->required()->check(CLI::PositiveNumber);
    sc_table->add_option("--dmax", dmax, "largest d")->required()->check(CLI::PositiveNumber);
    sc_table->add_option("--budget-secs", budget_secs, "per-cell budget; blank cells on timeout");
    sc_table->add_option("--jobs", jobs, "parallel branch workers")->check(CLI::PositiveNumber);

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        const std::uint32_t p = field ? field : default_field_char();
        require_prime(p);

        if (*sc_vertices) {
            const Params params(n, d);
            const auto ts = generate_tuples(params.category_space());
            if (format == "json") {
                auto arr = nlohmann::ordered_json::array();
                for (const IncTuple& t : ts)
                    arr.push_back(t.entries);
                out << arr.dump() << "\n";
            } else {
                for (const IncTuple& t : ts) {
                    if (format == "tsv") {
                        for (int i = 0; i < t.size(); ++i)
                            out << (i ? "\t" : "") << t[i];
                        out << "\n";
                    } else {
                        out << format_tuple(t) << "\n";
                    }
                }
            }
            return 0;
        }

        if (*sc_quiver) {
            const Params params(n, d);
            const TupleSpace space = module_level ? params.module_space() : params.category_space();
            const QuiverPresentation q = build_quiver(space);
            const bool want_dot = quiver_dot || (!quiver_json && format == "dot");
            if (want_dot)
                out << to_dot(q);
            else
                out << to_json(q) << "\n";
            return 0;
        }

        if (*sc_module) {
            const Params params(n, d);
            const ModuleCategory cat(params, p);
            const IncTuple x = parse_tuple(arg_x, params.category_space());
            const Representation m = build_module(cat, x);
            const auto supp = support(cat, x);
            if (format == "json") {
                nlohmann::ordered_json j;
                j["n"] = n;
                j["d"] = d;
                j["p"] = p;
                j["x"] = x.entries;
                j["total_dim"] = m.total_dim();
                j["support"] = nlohmann::ordered_json::array();
                for (const IncTuple& v : supp)
                    j["support"].push_back(v.entries);
                const auto pi = classify_proj_inj(cat, x);
                j["projective"] = pi.projective;
                j["injective"] = pi.injective;
                out << j.dump() << "\n";
            } else {
                out << "total_dim " << m.total_dim() << "\n";
                for (const IncTuple& v : supp)
                    out << format_tuple(v) << "\n";
            }
            return 0;
        }

        if (*sc_hom) {
            const Params params(n, d);
            const IncTuple x = parse_tuple(arg_x, params.category_space());
            const IncTuple y = parse_tuple(arg_y, params.category_space());
            int dim;
            if (use_oracle) {
                const ModuleCategory cat(params, p);
                dim = hom_dim_oracle(cat, x, y);
            } else {
                dim = e_hom(x, y) ? 1 : 0;
            }
            out << dim << "\n";
            return 0;
        }

        if (*sc_ext) {
            const Params params(n, d);
            const IncTuple x = parse_tuple(arg_x, params.category_space());
            const IncTuple y = parse_tuple(arg_y, params.category_space());
            const int deg = degree < 0 ? d : degree;
            if (deg < 1 || deg > d)
                throw CLI::ValidationError("--degree", "must lie in 1..d");
            int dim;
            if (use_oracle) {
                const ModuleCategory cat(params, p);
                dim = ext_dim_oracle(cat, x, y, deg);
            } else {
                // dim Ext^d(M_x, M_y) = 1 iff y E_Ext x; lower degrees vanish
                dim = (deg == d && e_ext(y, x)) ? 1 : 0;
            }
            out << dim << "\n";
            return 0;
        }

        if (*sc_sequence) {
            const Params params(n, d);
            const ModuleCategory cat(params, p);
            const IncTuple x = parse_tuple(arg_x, params.category_space());
            const IncTuple y = parse_tuple(arg_y, params.category_space());
            const RepComplex c = ext_sequence(cat, x, y);
            if (format == "json")
                out << complex_to_json(c) << "\n";
            else
                out << complex_plain(c) << "\n";
            return 0;
        }

        if (*sc_resolution) {
            const Params params(n, d);
            const ModuleCategory cat(params, p);
            const IncTuple x = parse_tuple(arg_x, params.category_space());
            const RepComplex c = resolution(cat, x, shift_s);
            if (format == "json")
                out << complex_to_json(c) << "\n";
            else
                out << complex_plain(c) << "\n";
            return 0;
        }

        if (*sc_closure) {
            const Params params(n, d);
            const auto xs = parse_tuple_args(tuple_args, params.category_space());
            const Collection c = wide_closure(params, xs);
            out << collection_json(c).dump() << "\n";
            return 0;
        }

        if (*sc_recognize) {
            const Params params(n, d);
            const auto xs = parse_tuple_args(tuple_args, params.category_space());
            const auto c = recognize_wide(params, xs);
            if (format == "json") {
                nlohmann::ordered_json j;
                j["wide"] = c.has_value();
                if (c)
                    j["collection"] = collection_json(*c);
                out << j.dump() << "\n";
            } else {
                if (c)
                    out << collection_json(*c).dump() << "\n";
                else
                    out << "not wide\n";
            }
            return 0;
        }

        if (*sc_count) {
            const Params params(n, d);
            CountOptions opts;
            if (budget_secs > 0)
                opts.budget_secs = budget_secs;
            opts.jobs = jobs;
            CountStats st;
            const BigUint w = count_wide(params, opts, &st);
            if (format == "json") {
                nlohmann::ordered_json j;
                j["n"] = n;
                j["d"] = d;
                j["w"] = w.to_string();
                if (stats) {
                    j["seconds"] = st.seconds;
                    j["nodes"] = st.nodes;
                }
                out << j.dump() << "\n";
            } else {
                out << w.to_string() << "\n";
            }
            return 0;
        }

        if (*sc_enumerate) {
            const Params params(n, d);
            if (format == "json") {
                auto arr = nlohmann::ordered_json::array();
                enumerate_collections(
                    params, [&](const Collection& c) { arr.push_back(collection_json(c)); }, cap);
                out << arr.dump() << "\n";
            } else {
                std::ostringstream buf;
                enumerate_collections(
                    params, [&](const Collection& c) { buf << collection_json(c).dump() << "\n"; },
                    cap);
                out << buf.str();
            }
            return 0;
        }

        if (*sc_verify) {
            const Params params(n, d);
            const VerifyReport rep = run_verify(params, p, jobs);
            out << "modules: " << rep.modules << " built, " << rep.bad_modules
                << " relation failures\n";
            out << "hom oracle vs formula: " << rep.hom_pairs << " pairs, " << rep.hom_mismatches
                << " mismatches\n";
            out << "ext^d oracle vs formula: " << rep.ext_pairs << " pairs, "
                << rep.ext_mismatches << " mismatches\n";
            out << "ext^i vanishing (1<=i<d): " << rep.vanishing_checks << " checks, "
                << rep.vanishing_violations << " violations\n";
            out << "ext sequences exact: " << rep.sequences << " complexes, "
                << rep.sequence_failures << " failures\n";
            out << "resolutions exact: " << rep.resolutions << " complexes, "
                << rep.resolution_failures << " failures\n";
            out << (rep.ok() ? "verify: OK\n" : "verify: MISMATCH\n");
            return rep.ok() ? 0 : 4;
        }

        if (*sc_table) {
            std::ostringstream buf;
            buf << "d";
            for (int nn = 1; nn <= nmax; ++nn)
                buf << "\t" << nn;
            buf << "\n";
            for (int dd = 1; dd <= dmax; ++dd) {
                buf << dd;
                for (int nn = 1; nn <= nmax; ++nn) {
                    buf << "\t";
                    CountOptions opts;
                    if (budget_secs > 0)
                        opts.budget_secs = budget_secs;
                    opts.jobs = jobs;
                    try {
                        buf << count_wide(Params(nn, dd), opts).to_string();
                    } catch (const BudgetExceeded&) {
                        // blank cell marks an unknown value, not zero
                    }
                }
                buf << "\n";
            }
            out << buf.str();
            return 0;
        }

        err << "no subcommand selected\n";
        return 2;
    } catch (const BudgetExceeded& e) {
        err << e.what() << "\n";
        return 3;
    } catch (const CapExceeded& e) {
        err << e.what() << "\n";
        return 3;
    } catch (const CLI::ValidationError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << e.what() << "\n";
        return 2;
    }
}

} // namespace widecat
