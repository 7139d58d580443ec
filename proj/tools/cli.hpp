#pragma once

#include "catalog.hpp"

#include "effhom/effhom.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

// Command-line front end. Exit codes: 0 success, 1 mathematical failure
// (law violations, not a cycle, failed pre-image), 2 usage errors
// (bad arguments, unknown instances, parse or membership errors).

namespace effhom::cli {

inline constexpr int kOk = 0;
inline constexpr int kFailure = 1;
inline constexpr int kUsage = 2;

class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct DegreeRange {
    Degree lo = 0;
    Degree hi = 0;
};

inline Degree parseDegree(std::string_view s) {
    Degree v = 0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    if (!s.empty() && s.front() == '+')
        ++first;
    auto [p, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || p != last || first == last)
        throw UsageError("invalid degree '" + std::string(s) + "'");
    return v;
}

/// "lo..hi", or a single degree.
inline DegreeRange parseRange(const std::string& s) {
    const auto dots = s.find("..");
    DegreeRange r;
    if (dots == std::string::npos) {
        r.lo = r.hi = parseDegree(s);
    } else {
        r.lo = parseDegree(std::string_view(s).substr(0, dots));
        r.hi = parseDegree(std::string_view(s).substr(dots + 2));
    }
    if (r.lo > r.hi)
        throw UsageError("empty degree range '" + s + "'");
    return r;
}

inline std::string degreeLabel(Degree i) {
    const std::string s = std::to_string(i);
    return s.size() == 1 ? s : "{" + s + "}";
}

struct Options {
    std::string format = "text";
    std::string degrees = "-8..8";
    std::size_t samples = 32;
    std::uint64_t seed = 7;
    std::int64_t coeffBound = 20;
    std::size_t support = 5;
    GeneratorIndex maxGen = 16;
    std::string homotopy;

    SamplerConfig sampler() const {
        const DegreeRange r = parseRange(degrees);
        if (samples == 0)
            throw UsageError("--samples must be at least 1");
        if (coeffBound < 0)
            throw UsageError("--coeff-bound must be non-negative");
        return SamplerConfig{r.lo, r.hi, samples, seed, coeffBound, support, maxGen};
    }
};

inline const InstanceEntry& requireInstance(const std::string& id) {
    if (const auto* e = findInstance(id))
        return *e;
    throw UsageError("unknown instance '" + id + "' (see `list`)");
}

inline HomotopyOperator requireHomotopy(const std::string& name, const InstanceEntry& inst) {
    const auto* h = findHomotopy(name);
    if (!h)
        throw UsageError("unknown homotopy '" + name + "' (see `list`)");
    if (!h->over.empty() && h->over != inst.id)
        throw UsageError("homotopy '" + name + "' is defined over '" + h->over +
                         "', not '" + inst.id + "'");
    return h->make(inst.complex());
}

class App {
  public:
    App(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

    int run(const std::vector<std::string>& args) {
        CLI::App app{"Effective homology kernel: evaluate, check, invert and compute homology "
                     "on the instance catalog"};
        app.require_subcommand(1);
        // Long form only, so `--h` can name a homotopy.
        app.set_help_flag("--help", "print this help and exit");
        app.set_help_all_flag("--help-all");

        std::string instance, op, index, element, law, range;

        auto addFormat = [&](CLI::App* sub) {
            sub->add_option("--format", opts_.format, "text or json")
                ->check(CLI::IsMember({"text", "json"}));
        };

        auto* list = app.add_subcommand("list", "list instances and homotopies");
        addFormat(list);

        auto* eval = app.add_subcommand("eval", "apply diff or h:<name> at an index");
        eval->add_option("instance", instance)->required();
        eval->add_option("operator", op, "diff or h:<name>")->required();
        eval->add_option("index", index)->required();
        eval->add_option("element", element)->required();
        addFormat(eval);

        auto* check = app.add_subcommand("check", "sample a law over a degree window");
        check->add_option("instance", instance)->required();
        check->add_option("law", law,
                          "nilpotency, chain-morphism, reduction or contracting:<h>")
            ->required();
        check->add_option("--degrees", opts_.degrees, "lo..hi");
        check->add_option("--samples", opts_.samples);
        check->add_option("--seed", opts_.seed);
        check->add_option("--coeff-bound", opts_.coeffBound);
        check->add_option("--support", opts_.support);
        check->add_option("--max-gen", opts_.maxGen);
        addFormat(check);

        auto* pre = app.add_subcommand("preimage", "solve d(z) = x for a cycle x");
        pre->add_option("instance", instance)->required();
        pre->add_option("index", index, "degree of x")->required();
        pre->add_option("element", element)->required();
        pre->add_option("--h", opts_.homotopy, "contracting homotopy to use");
        addFormat(pre);

        auto* hom = app.add_subcommand("homology", "homology groups over a degree range");
        hom->add_option("instance", instance)->required();
        hom->add_option("range", range, "lo..hi")->required();
        addFormat(hom);

        std::vector<const char*> argv;
        argv.push_back("effhom");
        for (const auto& a : args)
            argv.push_back(a.c_str());
        try {
            app.parse(static_cast<int>(argv.size()), argv.data());
        } catch (const CLI::CallForHelp&) {
            out_ << app.help();
            return kOk;
        } catch (const CLI::CallForAllHelp&) {
            out_ << app.help("", CLI::AppFormatMode::All);
            return kOk;
        } catch (const CLI::ParseError& e) {
            err_ << "error: " << e.what() << '\n';
            return kUsage;
        }

        try {
            if (list->parsed())
                return doList();
            if (eval->parsed())
                return doEval(instance, op, index, element);
            if (check->parsed())
                return doCheck(instance, law);
            if (pre->parsed())
                return doPreimage(instance, index, element);
            if (hom->parsed())
                return doHomology(instance, range);
        } catch (const UsageError& e) {
            err_ << "error: " << e.what() << '\n';
            return kUsage;
        } catch (const ParseError& e) {
            err_ << "error: " << e.what() << '\n';
            return kUsage;
        } catch (const MembershipError& e) {
            err_ << "error: " << e.what() << '\n';
            return kUsage;
        } catch (const NotFiniteError& e) {
            err_ << "error: " << e.what() << '\n';
            return kUsage;
        } catch (const ShapeError& e) {
            err_ << "error: " << e.what() << '\n';
            return kUsage;
        }
        return kUsage;
    }

  private:
    bool json() const { return opts_.format == "json"; }

    void emit(const nlohmann::json& j) { out_ << j.dump(2) << '\n'; }

    int doList() {
        if (json()) {
            nlohmann::json j = {{"instances", nlohmann::json::array()},
                                {"homotopies", nlohmann::json::array()}};
            for (const auto& e : instanceCatalog())
                j["instances"].push_back(
                    {{"id", e.id},
                     {"kind", e.effectiveHomology ? "effective-homology" : "complex"},
                     {"description", e.description}});
            for (const auto& h : homotopyCatalog())
                j["homotopies"].push_back(
                    {{"id", h.id}, {"over", h.over.empty() ? "*" : h.over},
                     {"description", h.description}});
            emit(j);
            return kOk;
        }
        for (const auto& e : instanceCatalog())
            out_ << e.id << "  [" << (e.effectiveHomology ? "effective-homology" : "complex")
                 << "]  " << e.description << '\n';
        for (const auto& h : homotopyCatalog())
            out_ << "h:" << h.id << "  [over " << (h.over.empty() ? "*" : h.over) << "]  "
                 << h.description << '\n';
        return kOk;
    }

    int doEval(const std::string& id, const std::string& op, const std::string& index,
               const std::string& text) {
        const auto& inst = requireInstance(id);
        const Degree i = parseDegree(index);
        const ChainComplex cc = inst.complex();
        std::optional<ModMorphism> phi;
        if (op == "diff") {
            phi = cc.diff(i);
        } else if (op.rfind("h:", 0) == 0) {
            phi = requireHomotopy(op.substr(2), inst).at(i);
        } else {
            throw UsageError("operator must be 'diff' or 'h:<name>', got '" + op + "'");
        }
        const Element x = parseElement(text, phi->source());
        const std::string result = format((*phi)(x), phi->target());
        if (json())
            emit({{"instance", id}, {"operator", op}, {"index", i},
                  {"input", format(x, phi->source())}, {"result", result}});
        else
            out_ << result << '\n';
        return kOk;
    }

    int doCheck(const std::string& id, const std::string& lawName) {
        const auto& inst = requireInstance(id);
        const Sampler sampler(opts_.sampler());
        const ChainComplex cc = inst.complex();
        LawReport report;
        if (lawName == "nilpotency") {
            report = checkNilpotency(cc, sampler);
        } else if (lawName == "chain-morphism") {
            if (!inst.effectiveHomology)
                throw UsageError("chain-morphism needs an effective-homology instance");
            const Reduction& r = inst.effectiveHomology()->reduction();
            report.merge(checkChainMorphism(r.f, sampler, "chain-morphism.f"));
            report.merge(checkChainMorphism(r.g, sampler, "chain-morphism.g"));
            for (const auto& [name, make] : inst.extraMorphisms)
                report.merge(checkChainMorphism(make(), sampler, "chain-morphism." + name));
        } else if (lawName == "reduction") {
            if (!inst.effectiveHomology)
                throw UsageError("reduction needs an effective-homology instance");
            report = checkReductionLaws(inst.effectiveHomology()->reduction(), sampler);
        } else if (lawName.rfind("contracting:", 0) == 0) {
            report = checkContracting(cc, requireHomotopy(lawName.substr(12), inst), sampler);
        } else {
            throw UsageError("unknown law '" + lawName + "'");
        }
        if (json()) {
            nlohmann::json j = report.toJson();
            j["instance"] = id;
            j["ok"] = report.ok();
            emit(j);
        } else {
            out_ << report.toText();
        }
        return report.ok() ? kOk : kFailure;
    }

    int doPreimage(const std::string& id, const std::string& index, const std::string& text) {
        const auto& inst = requireInstance(id);
        const Degree i = parseDegree(index);
        std::string hname = opts_.homotopy;
        if (hname.empty())
            hname = inst.designatedHomotopy;
        if (hname.empty())
            throw UsageError("instance '" + id + "' has no designated homotopy; pass --h");
        const HomotopyOperator h = requireHomotopy(hname, inst);
        const ChainComplex cc = inst.complex();
        const Module degreeModule = cc.at(i);
        const Element x = parseElement(text, degreeModule);
        try {
            const Element z = preimage(cc, h, i, x);
            const std::string shown = format(z, cc.at(i + 1));
            if (json())
                emit({{"instance", id}, {"index", i}, {"homotopy", hname},
                      {"input", format(x, degreeModule)}, {"preimage", shown}});
            else
                out_ << shown << '\n';
            return kOk;
        } catch (const NotACycleError& e) {
            const std::string boundary = format(e.boundary(), e.module());
            if (json())
                emit({{"instance", id}, {"index", i}, {"error", "not-a-cycle"},
                      {"boundary", boundary}});
            else
                out_ << "not a cycle: d_" << degreeLabel(e.diffIndex()) << "(x) = " << boundary
                     << '\n';
            return kFailure;
        } catch (const VerificationFailedError& e) {
            const std::string cand = format(e.candidate(), cc.at(i + 1));
            const std::string img = format(e.image(), degreeModule);
            if (json())
                emit({{"instance", id}, {"index", i}, {"error", "verification-failed"},
                      {"candidate", cand}, {"image", img}});
            else
                out_ << "verification failed: h(x) = " << cand << ", d(h(x)) = " << img
                     << '\n';
            return kFailure;
        }
    }

    int doHomology(const std::string& id, const std::string& rangeText) {
        const auto& inst = requireInstance(id);
        const DegreeRange r = parseRange(rangeText);
        nlohmann::json groups = nlohmann::json::array();
        std::string text;
        for (Degree i = r.lo; i <= r.hi; ++i) {
            const HomologyGroup g = inst.effectiveHomology
                                        ? homologyViaEffectiveHomology(*inst.effectiveHomology(), i)
                                        : homologyAt(inst.complex(), i);
            nlohmann::json torsion = nlohmann::json::array();
            for (const auto& t : g.torsion)
                torsion.push_back(t.str());
            groups.push_back({{"degree", i}, {"group", g.toString()},
                              {"betti", g.bettiRank}, {"torsion", torsion}});
            text += "H_" + degreeLabel(i) + "=" + g.toString() + "\n";
        }
        if (json())
            emit({{"instance", id}, {"degrees", groups}});
        else
            out_ << text;
        return kOk;
    }

    std::ostream& out_;
    std::ostream& err_;
    Options opts_;
};

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    return App(out, err).run(args);
}

} // namespace effhom::cli
