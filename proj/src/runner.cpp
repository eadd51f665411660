#include "hbasis/runner.hpp"

#include <chrono>
#include <fstream>
#include <iostream>

#include <nlohmann/json.hpp>

#include "hbasis/annotate.hpp"
#include "hbasis/approx.hpp"
#include "hbasis/errors.hpp"
#include "hbasis/hd_persistence.hpp"
#include "hbasis/io.hpp"
#include "hbasis/minbasis.hpp"
#include "hbasis/oracle.hpp"

namespace hbasis {

namespace {

using ojson = nlohmann::ordered_json;

const char* measure_name(SizeKind s)
{
    return s == SizeKind::SumOfWeights ? "sum" : "radius";
}

const char* distance_name(DistanceKind d)
{
    return d == DistanceKind::Graph ? "graph" : "function";
}

/// Annotation bit string, most significant bit (coordinate g-1) first.
std::string annotation_string(const BitVector& a)
{
    std::string s;
    s.reserve(a.size());
    for (std::size_t i = a.size(); i-- > 0;)
        s.push_back(a.get(i) ? '1' : '0');
    return s;
}

ojson cycle_to_json(const CycleRepr& c, const SimplicialComplex& k)
{
    ojson entry;
    if (c.dim == 1) {
        auto& edges = entry["edges"] = ojson::array();
        for (std::size_t e : c.simplices)
            edges.push_back({k.edges()[e].u, k.edges()[e].v});
    } else {
        auto& simplices = entry["simplices"] = ojson::array();
        for (std::size_t s : c.simplices)
            simplices.push_back(k.simplex_vertices(c.dim, s));
    }
    entry["size"] = c.size;
    entry["annotation"] = annotation_string(c.annotation);
    if (c.root >= 0)
        entry["root"] = c.root;
    return entry;
}

ojson basis_to_json(const BasisResult& basis, const SimplicialComplex& k)
{
    ojson out;
    out["g"] = basis.g;
    auto& cycles = out["basis"] = ojson::array();
    for (const CycleRepr& c : basis.cycles)
        cycles.push_back(cycle_to_json(c, k));
    out["size_sequence"] = basis.size_sequence;
    out["total_size"] = basis.total_size;
    return out;
}

DistanceEvaluator make_distance(const RunConfig& config, const SimplicialComplex& k)
{
    if (config.distance == DistanceKind::Graph)
        return DistanceEvaluator::graph_distance(k);
    if (!k.vertex_function())
        throw ValidateError("distance 'function' requires a vertex_function in the input");
    return DistanceEvaluator::function_distance(k);
}

void validate_or_throw(const SimplicialComplex& k)
{
    const std::vector<std::string> violations = k.validate();
    if (!violations.empty()) {
        std::string joined;
        for (const std::string& v : violations)
            joined += (joined.empty() ? "" : "; ") + v;
        throw ValidateError(joined);
    }
}

} // namespace

const char* command_name(Command c)
{
    switch (c) {
    case Command::Exact:
        return "exact";
    case Command::Approx:
        return "approx";
    case Command::Hd:
        return "hd";
    case Command::Rank:
        return "rank";
    case Command::Oracle:
        return "oracle";
    case Command::Validate:
        return "validate";
    }
    return "?";
}

nlohmann::ordered_json run(const RunConfig& config, const SimplicialComplex& k)
{
    const auto t0 = std::chrono::steady_clock::now();

    ojson doc;
    ojson& echo = doc["config"] = ojson::object();
    echo["command"] = command_name(config.command);
    if (!config.input_path.empty())
        echo["input"] = config.input_path;
    if (config.command == Command::Exact || config.command == Command::Oracle)
        echo["measure"] = measure_name(config.measure);
    if (config.command == Command::Exact || config.command == Command::Oracle ||
        config.command == Command::Approx || config.command == Command::Hd)
        echo["distance"] = distance_name(config.distance);
    if (config.command == Command::Hd)
        echo["dim"] = config.dim;
    if (config.command == Command::Approx) {
        echo["seed"] = config.seed;
        echo["c0"] = config.c0;
    }
    if (config.command == Command::Oracle)
        echo["max_oracle_edges"] = config.max_oracle_edges;

    if (config.command == Command::Validate) {
        const std::vector<std::string> violations = k.validate();
        doc["ok"] = violations.empty();
        doc["violations"] = violations;
        const auto t1 = std::chrono::steady_clock::now();
        doc["timing_ms"] = std::chrono::duration<double, std::milli>(t1 - t0).count();
        return doc;
    }

    validate_or_throw(k);

    switch (config.command) {
    case Command::Rank: {
        doc["g"] = k.betti_1();
        break;
    }
    case Command::Exact: {
        const DistanceEvaluator dist = make_distance(config, k);
        const AnnotationTable ann = annotate_edges(k);
        const HortonCandidates cands =
            HortonCandidates::build(k, dist, SizeMeasure{config.measure});
        const BasisResult basis = cycle_basis(cands, ann);
        doc.update(basis_to_json(basis, k));
        break;
    }
    case Command::Approx: {
        if (config.measure != SizeKind::SumOfWeights)
            throw ValidateError("approx supports only the sum measure");
        const DistanceEvaluator dist = make_distance(config, k);
        const AnnotationTable ann = annotate_edges(k);
        ApproxCertificate certificate;
        const BasisResult basis =
            approx_basis(k, dist, ann, {config.seed, config.c0}, &certificate);
        doc.update(basis_to_json(basis, k));
        ojson& cert = doc["certificate"] = ojson::object();
        cert["requested_roots"] = certificate.requested_roots;
        cert["used_roots"] = certificate.used_roots;
        cert["doublings"] = certificate.doublings;
        cert["seed"] = certificate.seed;
        cert["c0"] = certificate.c0;
        cert["size_sequence"] = certificate.size_sequence;
        break;
    }
    case Command::Hd: {
        if (config.dim < 1)
            throw ValidateError("hd requires --dim >= 1");
        const DistanceEvaluator dist = make_distance(config, k);
        const BasisResult basis = hd_minimal_basis(k, config.dim, dist);
        doc.update(basis_to_json(basis, k));
        break;
    }
    case Command::Oracle: {
        if (k.n_edges() > config.max_oracle_edges)
            throw GuardError("oracle refused: " + std::to_string(k.n_edges()) +
                             " edges exceed --max-oracle-edges " +
                             std::to_string(config.max_oracle_edges));
        const DistanceEvaluator dist = make_distance(config, k);
        const BasisResult basis = oracle_min_basis(k, dist, SizeMeasure{config.measure});
        doc.update(basis_to_json(basis, k));
        break;
    }
    case Command::Validate:
        break; // handled above
    }

    const auto t1 = std::chrono::steady_clock::now();
    doc["timing_ms"] = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return doc;
}

int run_main(const RunConfig& config)
{
    auto emit = [&](const ojson& doc) {
        const std::string text = doc.dump(2) + "\n";
        if (config.output_path.empty()) {
            std::cout << text;
        } else {
            std::ofstream out(config.output_path);
            out << text;
        }
    };
    try {
        const SimplicialComplex k = parse_complex_file(config.input_path);
        const ojson doc = run(config, k);
        emit(doc);
        if (config.command == Command::Validate && !doc.at("ok").get<bool>())
            return kExitValidate;
        return kExitOk;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const ValidateError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kExitValidate;
    } catch (const GuardError& e) {
        std::cerr << "guard: " << e.what() << "\n";
        return kExitGuard;
    } catch (const InternalInvariantError& e) {
        std::cerr << "internal invariant failure: " << e.what() << "\n";
        return kExitInternal;
    }
}

} // namespace hbasis
