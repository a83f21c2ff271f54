#include "bw/io.hpp"

#include <istream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace bw {
namespace io {

namespace {

using nlohmann::json;

bool skip_line(const std::string& line) {
    for (char c : line) {
        if (c == '#') return true;
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;  // blank
}

template <typename T, typename Parse>
std::vector<std::vector<T>> read_rows(std::istream& in, Parse parse) {
    std::vector<std::vector<T>> out;
    std::string line;
    while (std::getline(in, line)) {
        if (skip_line(line)) continue;
        std::istringstream ss(line);
        std::vector<T> row;
        std::string tok;
        while (ss >> tok) row.push_back(parse(tok));
        if (!out.empty() && row.size() != out.front().size())
            throw std::invalid_argument("vector file: inconsistent row lengths");
        out.push_back(std::move(row));
    }
    return out;
}

std::string fmt(double v) {
    std::ostringstream ss;
    ss.precision(12);
    ss << v;
    return ss.str();
}

}  // namespace

std::vector<RealVec> read_real_vectors(std::istream& in) {
    return read_rows<double>(in, [](const std::string& t) { return std::stod(t); });
}

std::vector<IntVec> read_int_vectors(std::istream& in) {
    return read_rows<std::int64_t>(in, [](const std::string& t) {
        std::size_t pos = 0;
        const std::int64_t v = std::stoll(t, &pos);
        if (pos != t.size()) throw std::invalid_argument("expected integer, got '" + t + "'");
        return v;
    });
}

std::vector<IntVec> read_symbol_lines(std::istream& in) {
    std::vector<IntVec> out;
    std::string line;
    while (std::getline(in, line)) {
        if (skip_line(line)) continue;
        IntVec row;
        std::istringstream ss(line);
        std::string tok;
        while (std::getline(ss, tok, ',')) row.push_back(std::stoll(tok));
        if (!out.empty() && row.size() != out.front().size())
            throw std::invalid_argument("message file: inconsistent row lengths");
        out.push_back(std::move(row));
    }
    return out;
}

std::string params_to_json(const LatticeParams& p) {
    json j;
    j["t"] = p.t;
    j["n"] = p.n;
    j["d"] = p.d;
    j["rho2"] = p.rho2;
    j["volume"] = p.volume;
    j["kissing"] = p.kissing;
    j["gamma"] = p.gamma;
    j["sigma2_max"] = p.sigma2_max;
    return j.dump(2);
}

std::string sim_config_to_json(const SimConfig& cfg) {
    json j;
    j["t"] = cfg.t;
    j["algo"] = cfg.algo == SimAlgo::bdd ? "bdd" : "bounded-list";
    if (cfg.algo == SimAlgo::bounded_list) {
        j["schedule"]["delta"] = cfg.schedule.delta;
        j["schedule"]["truncations"] = cfg.schedule.truncations;
    }
    j["vnr_points_db"] = cfg.vnr_points_db;
    j["trials_per_point"] = cfg.trials_per_point;
    j["seed"] = cfg.seed;
    j["max_errors"] = cfg.max_errors;
    j["tx_mode"] = cfg.tx_mode == TxMode::zero_word ? "zero-word" : "random-point";
    j["tx_range"] = cfg.tx_range;
    j["rng"] = "splitmix64-substream/mt19937_64/box-muller";
    return j.dump(2);
}

SimConfig sim_config_from_json(const std::string& text) {
    const json j = json::parse(text);
    SimConfig cfg;
    cfg.t = j.at("t").get<int>();
    const std::string algo = j.at("algo").get<std::string>();
    if (algo == "bdd")
        cfg.algo = SimAlgo::bdd;
    else if (algo == "bounded-list")
        cfg.algo = SimAlgo::bounded_list;
    else
        throw std::invalid_argument("config: algo must be 'bdd' or 'bounded-list'");
    if (cfg.algo == SimAlgo::bounded_list) {
        const json& s = j.at("schedule");
        cfg.schedule = make_schedule(s.at("delta").get<double>(),
                                     s.at("truncations").get<std::vector<int>>());
    }
    cfg.vnr_points_db = j.at("vnr_points_db").get<std::vector<double>>();
    if (j.contains("trials_per_point"))
        cfg.trials_per_point = j.at("trials_per_point").get<std::int64_t>();
    if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("max_errors")) cfg.max_errors = j.at("max_errors").get<std::int64_t>();
    if (j.contains("tx_mode")) {
        const std::string m = j.at("tx_mode").get<std::string>();
        if (m == "zero-word")
            cfg.tx_mode = TxMode::zero_word;
        else if (m == "random-point")
            cfg.tx_mode = TxMode::random_point;
        else
            throw std::invalid_argument("config: tx_mode must be 'zero-word' or 'random-point'");
    }
    if (j.contains("tx_range")) cfg.tx_range = j.at("tx_range").get<std::int64_t>();
    return cfg;
}

std::string campaign_to_csv(const SimResult& r) {
    std::ostringstream ss;
    ss << "vnr_db,trials,point_errors,per,nep,ci_low,ci_high,mean_ops\n";
    for (const SimPoint& p : r.points) {
        ss << fmt(p.vnr_db) << ',' << p.trials << ',' << p.point_errors << ','
           << fmt(p.per) << ',' << fmt(p.nep) << ',' << fmt(p.ci_low) << ','
           << fmt(p.ci_high) << ',' << fmt(p.mean_ops) << '\n';
    }
    return ss.str();
}

std::string ser_to_csv(const SerResult& r) {
    std::ostringstream ss;
    ss << "vnr_db,trials,point_errors,per,nep,ci_low,ci_high,mean_ops,incomplete_rate\n";
    for (const SerPoint& p : r.points) {
        ss << fmt(p.vnr_db) << ',' << p.trials << ',' << p.symbol_errors << ','
           << fmt(p.ser) << ',' << fmt(p.ser) << ',' << fmt(p.ci_low) << ','
           << fmt(p.ci_high) << ',' << fmt(p.mean_ops) << ',' << fmt(p.incomplete_rate)
           << '\n';
    }
    return ss.str();
}

Csv read_csv(std::istream& in) {
    Csv out;
    std::string line;
    if (!std::getline(in, line)) return out;
    std::istringstream hs(line);
    std::string tok;
    while (std::getline(hs, tok, ',')) out.header.push_back(tok);
    while (std::getline(in, line)) {
        if (skip_line(line)) continue;
        std::istringstream ss(line);
        std::vector<double> row;
        while (std::getline(ss, tok, ',')) row.push_back(std::stod(tok));
        if (row.size() != out.header.size())
            throw std::invalid_argument("csv: row width does not match header");
        out.rows.push_back(std::move(row));
    }
    return out;
}

}  // namespace io
}  // namespace bw
