#include "permcf/cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "permcf/bijections.hpp"
#include "permcf/perm.hpp"
#include "permcf/stats.hpp"
#include "permcf/theorems.hpp"

namespace permcf::cli {

namespace {

using json = nlohmann::ordered_json;

struct InvalidInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string trim(std::string_view s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

json integer_json(const mpz_class& z) {
    if (z.fits_slong_p()) return z.get_si();
    return z.get_str();
}

template <typename Class, typename Fn>
json index_sets(const Permutation& s, const std::vector<Class>& order, Fn classify) {
    std::map<Class, std::vector<int>> sets;
    for (int i = 1; i <= s.size(); ++i) sets[classify(i)].push_back(i);
    json j = json::object();
    for (Class c : order) j[std::string(to_string(c))] = sets[c];
    return j;
}

json classification(const Permutation& s) {
    using CC = CycleClass;
    using RC = RecordClass;
    using RCC = RecordCycleClass;
    using VRC = VariantRecordCycleClass;
    json j;
    j["cycle"] = index_sets<CC>(s, {CC::Cpeak, CC::Cval, CC::Cdrise, CC::Cdfall, CC::Fix},
                                [&](int i) { return cycle_class(s, i); });
    j["record"] = index_sets<RC>(s, {RC::Erec, RC::Earec, RC::Rar, RC::Nrar},
                                 [&](int i) { return record_class(s, i); });
    j["record_cycle"] = index_sets<RCC>(
        s,
        {RCC::Ereccval, RCC::Ereccdrise, RCC::Eareccpeak, RCC::Eareccdfall, RCC::Rar, RCC::Nrcpeak, RCC::Nrcval,
         RCC::Nrcdrise, RCC::Nrcdfall, RCC::Nrfix},
        [&](int i) { return record_cycle_class(s, i); });
    j["variant_record"] = index_sets<RC>(s, {RC::Erec, RC::Earec, RC::Rar, RC::Nrar},
                                         [&](int i) { return variant_record_class(s, i); });
    j["variant_record_cycle"] = index_sets<VRC>(
        s,
        {VRC::Ereccpeak, VRC::Ereccdrise, VRC::Eareccval, VRC::Eareccdfall, VRC::Rar, VRC::Nrcpeak, VRC::Nrcval,
         VRC::Nrcdrise, VRC::Nrcdfall, VRC::Nrfix},
        [&](int i) { return variant_record_cycle_class(s, i); });
    return j;
}

Permutation parse_perm(const std::string& text) {
    try {
        return Permutation::parse(text);
    } catch (const std::exception& e) {
        throw InvalidInput(e.what());
    }
}

std::string history_line(const HistoryStep& h) {
    std::ostringstream os;
    os << h.stage << ' ' << h.edge.first << " -> " << h.edge.second;
    if (h.closes_cycle) os << " closes";
    return os.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

CFSpec parse_cf_file(std::string_view text, CFKind kind) {
    struct Entry {
        char seq;
        int k;
        Poly p;
    };
    std::vector<Entry> entries;
    int depth = 0;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::string t = trim(line);
        if (t.empty()) continue;
        auto colon = t.find(':');
        if (colon == std::string::npos) throw InvalidInput("line " + std::to_string(lineno) + ": missing ':'");
        std::istringstream head(t.substr(0, colon));
        std::vector<std::string> words;
        for (std::string w; head >> w;) words.push_back(w);
        char seq = kind == CFKind::J ? 'b' : 'a';
        std::string idx;
        if (words.size() == 1) {
            idx = words[0];
        } else if (words.size() == 2) {
            static const std::map<std::string, char> names{
                {"alpha", 'a'}, {"beta", 'b'}, {"gamma", 'g'}, {"delta", 'd'}};
            auto it = names.find(words[0]);
            if (it == names.end()) throw InvalidInput("line " + std::to_string(lineno) + ": unknown sequence");
            seq = it->second;
            idx = words[1];
        } else {
            throw InvalidInput("line " + std::to_string(lineno) + ": expected '[name] k: polynomial'");
        }
        int k = 0;
        try {
            std::size_t used = 0;
            k = std::stoi(idx, &used);
            if (used != idx.size() || k < 0) throw std::invalid_argument("index");
        } catch (const std::exception&) {
            throw InvalidInput("line " + std::to_string(lineno) + ": bad index '" + idx + "'");
        }
        const bool allowed = (seq == 'a' && kind != CFKind::J) || ((seq == 'b' || seq == 'g') && kind == CFKind::J) ||
                             (seq == 'd' && kind == CFKind::T);
        if (!allowed) throw InvalidInput("line " + std::to_string(lineno) + ": sequence not used by this fraction");
        if (k == 0 && seq != 'g') throw InvalidInput("line " + std::to_string(lineno) + ": index 0 only for gamma");
        Poly p;
        try {
            p = Poly::parse(t.substr(colon + 1));
        } catch (const std::exception& e) {
            throw InvalidInput("line " + std::to_string(lineno) + ": " + e.what());
        }
        depth = std::max(depth, k);
        entries.push_back({seq, k, std::move(p)});
    }
    CFSpec cf(kind, depth);
    for (auto& e : entries) {
        auto k = static_cast<std::size_t>(e.k);
        switch (e.seq) {
            case 'a': cf.alpha[k] = e.p; break;
            case 'b': cf.beta[k] = e.p; break;
            case 'g': cf.gamma[k] = e.p; break;
            case 'd': cf.delta[k] = e.p; break;
        }
    }
    return cf;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Permutation statistics, lattice-path bijections and continued fractions"};
    app.name("permcf");
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "JSON output");

    auto* enumerate = app.add_subcommand("enumerate", "List permutations of a given size");
    int en_size = 0;
    std::string en_class;
    enumerate->add_option("n", en_size, "Size")->required()->check(CLI::Range(0, 14));
    enumerate->add_option("--dperm", en_class, "D-permutation class: all, e, o, eo, cycle")
        ->check(CLI::IsMember({"all", "e", "o", "eo", "cycle"}));

    auto* stats = app.add_subcommand("stats", "Statistics of a permutation");
    std::string st_perm;
    stats->add_option("permutation", st_perm, "Word or cycle notation")->required();

    auto* biject = app.add_subcommand("biject", "Apply a bijection");
    std::string bj_name, bj_dir = "fwd", bj_input;
    biject->add_option("bijection", bj_name, "fz, ds or dsv")->required()->check(CLI::IsMember({"fz", "ds", "dsv"}));
    biject->add_option("--dir", bj_dir, "fwd or inv")->check(CLI::IsMember({"fwd", "inv"}));
    biject->add_option("input", bj_input, "Permutation (fwd) or labelled path (inv)")->required();

    auto* hist = app.add_subcommand("history", "Laguerre-digraph history of a labelled path");
    std::string hi_name, hi_input;
    bool hi_path = false;
    hist->add_option("bijection", hi_name, "fz, ds or dsv")->required()->check(CLI::IsMember({"fz", "ds", "dsv"}));
    hist->add_option("input", hi_input, "Permutation, or labelled path with --path")->required();
    hist->add_flag("--path", hi_path, "Input is a labelled path");

    auto* expand_cmd = app.add_subcommand("expand", "Expand a continued fraction");
    std::string ex_kind, ex_file, ex_theorem;
    int ex_n = 0;
    auto* ex_cf_opt = expand_cmd->add_option("--cf", ex_kind, "S, J or T")->check(CLI::IsMember({"S", "J", "T"}));
    auto* ex_file_opt = expand_cmd->add_option("--coeffs", ex_file, "Coefficient file");
    auto* ex_th_opt = expand_cmd->add_option("--theorem", ex_theorem, "Use the fraction of a registered theorem");
    expand_cmd->add_option("-N", ex_n, "Order")->required()->check(CLI::Range(0, 64));
    ex_cf_opt->needs(ex_file_opt);
    ex_file_opt->needs(ex_cf_opt);
    ex_th_opt->excludes(ex_file_opt);

    auto* sequence = app.add_subcommand("sequence", "Integer sequences from S-fractions");
    std::string sq_name;
    int sq_n = 0;
    sequence->add_option("name", sq_name, "factorial, genocchi or median")
        ->required()
        ->check(CLI::IsMember({"factorial", "genocchi", "median"}));
    sequence->add_option("-N", sq_n, "Last index")->required()->check(CLI::Range(0, 200));

    auto* verify_cmd = app.add_subcommand("verify", "Check a theorem by enumeration");
    std::string vf_theorem;
    int vf_n = 0;
    verify_cmd->add_option("theorem", vf_theorem, "Theorem id, or 'all'")->required();
    verify_cmd->add_option("-n", vf_n, "Largest coefficient index")->required()->check(CLI::Range(0, 7));

    for (auto* sub : app.get_subcommands({})) sub->add_flag("--json", as_json, "JSON output");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kInvalidInput;
    }

    try {
        if (*enumerate) {
            json list = json::array();
            auto emit = [&](const Permutation& p) {
                if (as_json)
                    list.push_back(p.to_string());
                else
                    out << p.to_string() << "\n";
            };
            if (en_class.empty()) {
                for_each_permutation(en_size, emit);
            } else {
                if (en_size % 2 != 0) throw InvalidInput("D-permutations need an even size");
                for_each_dpermutation(en_size, dperm_class_from_string(en_class), emit);
            }
            if (as_json) {
                json j;
                j["size"] = en_size;
                j["class"] = en_class.empty() ? "sym" : en_class;
                j["count"] = list.size();
                j["permutations"] = std::move(list);
                out << j.dump(2) << "\n";
            }
        } else if (*stats) {
            Permutation s = parse_perm(st_perm);
            StatVector sv = stat_vector(s);
            if (as_json) {
                json j;
                j["permutation"] = s.to_string();
                j["cycles"] = s.to_cycle_string();
                j["stats"] = sv.to_json();
                j["classification"] = classification(s);
                out << j.dump(2) << "\n";
            } else {
                for (const auto& [name, v] : sv.entries()) out << name << " " << v << "\n";
            }
        } else if (*biject) {
            Bijection b = bijection_from_string(bj_name);
            if (bj_dir == "fwd") {
                Permutation s = parse_perm(bj_input);
                LabelledPath lp = forward(b, s);
                if (as_json)
                    out << lp.to_json().dump(2) << "\n";
                else
                    out << lp.to_string() << "\n";
            } else {
                LabelledPath lp = LabelledPath::parse(bj_input, ruleset_kind(ruleset_of(b)));
                LabelCheck chk = check_labelled(lp, ruleset_of(b));
                if (!chk.ok) throw InvalidInput("step " + std::to_string(chk.index) + ": " + chk.reason);
                Permutation s = inverse(b, lp);
                if (as_json) {
                    json j;
                    j["permutation"] = s.to_string();
                    j["cycles"] = s.to_cycle_string();
                    out << j.dump(2) << "\n";
                } else {
                    out << s.to_string() << "\n";
                }
            }
        } else if (*hist) {
            Bijection b = bijection_from_string(hi_name);
            LabelledPath lp = hi_path ? LabelledPath::parse(hi_input, ruleset_kind(ruleset_of(b)))
                                      : forward(b, parse_perm(hi_input));
            LabelCheck chk = check_labelled(lp, ruleset_of(b));
            if (!chk.ok) throw InvalidInput("step " + std::to_string(chk.index) + ": " + chk.reason);
            auto h = history(b, lp);
            if (as_json) {
                out << history_to_json(h).dump(2) << "\n";
            } else {
                for (const auto& step : h) out << history_line(step) << "\n";
            }
        } else if (*expand_cmd) {
            CFSpec cf;
            Poly prefactor(1L);
            if (!ex_theorem.empty()) {
                const Theorem& t = theorem(theorem_from_string(ex_theorem));
                cf = t.fraction(ex_n + 2);
                prefactor = t.prefactor;
            } else if (!ex_file.empty()) {
                cf = parse_cf_file(read_file(ex_file), cf_kind_from_string(ex_kind));
            } else {
                throw InvalidInput("expand needs --cf with --coeffs, or --theorem");
            }
            Series s = expand(cf, ex_n).scaled(prefactor);
            if (as_json) {
                json arr = json::array();
                for (const auto& c : s.coeffs()) arr.push_back(c.to_string());
                out << arr.dump(2) << "\n";
            } else {
                for (const auto& c : s.coeffs()) out << c.to_string() << "\n";
            }
        } else if (*sequence) {
            std::vector<mpz_class> v = sq_name == "factorial" ? factorials(sq_n)
                                       : sq_name == "genocchi" ? genocchi(sq_n)
                                                               : median_genocchi(sq_n);
            if (as_json) {
                json arr = json::array();
                for (const auto& z : v) arr.push_back(integer_json(z));
                out << arr.dump() << "\n";
            } else {
                for (std::size_t i = 0; i < v.size(); ++i) out << (i ? " " : "") << v[i].get_str();
                out << "\n";
            }
        } else if (*verify_cmd) {
            std::vector<TheoremId> ids;
            if (vf_theorem == "all")
                ids = all_theorems();
            else
                ids.push_back(theorem_from_string(vf_theorem));
            bool ok = true;
            json reports = json::array();
            for (TheoremId id : ids) {
                VerifyReport r = verify(id, vf_n);
                ok = ok && r.pass;
                if (as_json) {
                    reports.push_back(r.to_json());
                } else {
                    out << to_string(id) << " n<=" << vf_n << ": " << (r.pass ? "pass" : "fail");
                    if (r.first_discrepancy) out << " (first mismatch at n=" << r.first_discrepancy->n << ")";
                    out << "\n";
                }
            }
            if (as_json) out << (ids.size() == 1 ? reports[0] : reports).dump(2) << "\n";
            return ok ? kOk : kVerifyFailed;
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kInvalidInput;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return kInvalidInput;
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << "\n";
        return kInvalidInput;
    }
    return kOk;
}

}  // namespace permcf::cli
