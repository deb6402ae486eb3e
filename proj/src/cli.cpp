#include "pmlv/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <ostream>
#include <sstream>

#include "json.hpp"

#include "pmlv/errors.hpp"
#include "pmlv/lvalues.hpp"
#include "pmlv/verify.hpp"

namespace pmlv {

namespace {

using nlohmann::json;

long parse_env_long(const char* name)
{
    const std::string text = std::getenv(name);
    std::size_t used = 0;
    long v = 0;
    try {
        v = std::stol(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != text.size()) {
        throw DomainError(std::string(name) + " must be an integer, got '" + text + "'");
    }
    return v;
}

void validate(const JobConfig& c)
{
    static const std::vector<std::string> commands = {"eval", "closed", "genfun", "verify", "table"};
    if (std::find(commands.begin(), commands.end(), c.command) == commands.end()) {
        throw DomainError("unknown command '" + c.command + "'");
    }
    if (c.digits < 10 || c.digits > 100) {
        throw RangeError("precision must lie in [10, 100], got " + std::to_string(c.digits));
    }
    if (c.truncation < 10 || c.truncation > 100000000L) {
        throw RangeError("T must lie in [10, 10^8], got " + std::to_string(c.truncation));
    }
    if (c.mode != "exact" && c.mode != "numeric") {
        throw DomainError("mode must be exact or numeric");
    }
    if (c.output != "json" && c.output != "csv" && c.output != "text") {
        throw DomainError("output must be json, csv or text");
    }
    if (c.N < 1 || c.M < 1 || c.n < 1 || c.k < 0) {
        throw DomainError("N, M, n must be positive and k nonnegative");
    }
}

std::vector<int> eval_weights(const JobConfig& c)
{
    if (!c.weights.empty()) {
        return c.weights;
    }
    return std::vector<int>(static_cast<std::size_t>(c.k), c.n);
}

json inputs_json(const JobConfig& c)
{
    json j;
    if (c.command == "eval") {
        j = {{"N", c.N}, {"M", c.M}, {"T", c.truncation}, {"precision", c.digits}};
        j["weights"] = eval_weights(c);
    } else if (c.command == "closed") {
        j = {{"n", c.n}, {"k", c.k}, {"form", c.form}, {"normalize", c.normalize}};
    } else if (c.command == "genfun") {
        j = {{"series", c.series}, {"N", c.N}, {"M", c.M}, {"n", c.n}, {"order", c.order}, {"mode", c.mode}};
    } else if (c.command == "verify") {
        j = {{"suite", c.suite}, {"max_k", c.max_k}, {"T", c.truncation}, {"precision", c.digits}};
    } else {
        j = {{"n_max", c.n}, {"k_max", c.k}, {"mode", c.mode}};
        if (c.mode == "numeric") {
            j["T"] = c.truncation;
        }
    }
    return j;
}

std::string csv_quote(const std::string& s)
{
    if (s.find_first_of(",\"") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char ch : s) {
        out += ch;
        if (ch == '"') {
            out += '"';
        }
    }
    return out + "\"";
}

struct Outcome {
    json result;
    std::string error_estimate; // empty when not applicable
    std::string text;
    std::string csv;
    int status = kExitOk;
};

Outcome do_eval(JobConfig c)
{
    c.weights = eval_weights(c);
    const LValueSpec spec = LValueSpec::make(c.N, c.M, c.weights);
    OracleOptions o;
    o.truncation = c.truncation;
    o.digits = c.digits;
    const OracleResult r = oracle_eval(spec, o);

    Outcome out;
    out.result = {{"value", to_json(r.value, c.digits)},
                  {"partial_sum", to_json(r.partial_sum, c.digits)},
                  {"convergence", to_string(spec.convergence())},
                  {"averaged", r.averaged},
                  {"flagged", r.flagged}};
    out.error_estimate = r.error_estimate.str(3);
    out.text = "value = " + r.value.str(c.digits) + "\nerror_estimate = " + out.error_estimate + "\n";
    std::string w;
    for (std::size_t i = 0; i < c.weights.size(); ++i) {
        w += (i ? " " : "") + std::to_string(c.weights[i]);
    }
    out.csv = "N,M,weights,T,re,im,error_estimate\n" + std::to_string(c.N) + "," + std::to_string(c.M) + ","
            + w + "," + std::to_string(c.truncation) + "," + r.value.real().str(c.digits) + ","
            + r.value.imag().str(c.digits) + "," + out.error_estimate + "\n";
    return out;
}

SymbolicValue closed_value(const JobConfig& c)
{
    if (c.form == "auto") {
        return closed_S_k(c.n, c.k);
    }
    const BernoulliForm form = parse_bernoulli_form(c.form);
    if (c.n % 2 != 0) {
        throw DomainError("the Bernoulli forms need an even n, got " + std::to_string(c.n));
    }
    if (c.k == 0) {
        return SymbolicValue(1L);
    }
    return bernoulli_S_k_even(c.n / 2, c.k, form);
}

Outcome do_closed(const JobConfig& c)
{
    SymbolicValue v = closed_value(c);
    if (c.normalize) {
        v = normalize_even_zetas(v);
    }
    const std::string value = numeric_eval(v, c.digits).str(c.digits);
    Outcome out;
    out.result = to_json(v);
    out.result["value"] = value;
    out.text = render(v) + "\n";
    out.csv = "n,k,closed_form,value\n" + std::to_string(c.n) + "," + std::to_string(c.k) + ","
            + csv_quote(render(v)) + "," + value + "\n";
    return out;
}

Outcome do_genfun(const JobConfig& c)
{
    const int order = c.order >= 0 ? c.order : c.n * c.k;
    const bool exact = c.mode == "exact";
    Outcome out;
    out.result = json::array();
    out.csv = exact ? "degree,coefficient\n" : "degree,re,im\n";

    if (exact) {
        TruncatedSeries<SymbolicValue> s(0);
        if (c.series == "U") {
            s = genfun_U_exact(c.N, c.M, c.n, order);
        } else if (c.series == "S1") {
            s = genfun_S1_exact(c.M, c.n, order);
        } else if (c.series == "P") {
            s = genfun_P_exact(c.N, c.M, c.n, order);
        } else if (c.series == "P2") {
            s = genfun_P2(c.n, order);
        } else {
            throw DomainError("series must be U, S1, P or P2");
        }
        for (int d = 0; d <= order; ++d) {
            json term = to_json(s[d]);
            term["degree"] = d;
            out.result.push_back(std::move(term));
            out.text += "x^" + std::to_string(d) + ": " + render(s[d]) + "\n";
            out.csv += std::to_string(d) + "," + csv_quote(render(s[d])) + "\n";
        }
        return out;
    }
    TruncatedSeries<Complex> s(0);
    if (c.series == "U") {
        s = genfun_U_numeric(c.N, c.M, c.n, order, c.digits);
    } else if (c.series == "S1") {
        s = genfun_S1_numeric(c.M, c.n, order, c.digits);
    } else if (c.series == "P") {
        s = genfun_P_numeric(c.N, c.M, c.n, order, c.digits);
    } else {
        throw DomainError("numeric mode supports the U, S1 and P series");
    }
    for (int d = 0; d <= order; ++d) {
        json term = to_json(s[d], c.digits);
        term["degree"] = d;
        out.result.push_back(std::move(term));
        out.text += "x^" + std::to_string(d) + ": " + s[d].str(c.digits) + "\n";
        out.csv += std::to_string(d) + "," + s[d].real().str(c.digits) + "," + s[d].imag().str(c.digits) + "\n";
    }
    return out;
}

Outcome do_verify(const JobConfig& c, std::ostream& err)
{
    VerifyOptions v;
    v.suite = c.suite;
    v.max_k = c.max_k;
    v.truncation = c.truncation;
    v.digits = c.digits;
    v.jobs = c.jobs;
    const auto checks = run_verification(v);

    Outcome out;
    json list = json::array();
    json failed = json::array();
    out.csv = "suite,name,pass,gap,tolerance\n";
    for (const auto& ch : checks) {
        list.push_back(to_json(ch));
        std::ostringstream gap;
        if (ch.gap) {
            gap << *ch.gap;
        }
        std::ostringstream tol;
        if (ch.tolerance) {
            tol << *ch.tolerance;
        }
        out.text += std::string(ch.pass ? "PASS " : "FAIL ") + ch.suite + ": " + ch.name;
        if (ch.gap) {
            out.text += " (gap " + gap.str() + ")";
        }
        out.text += "\n";
        out.csv += ch.suite + "," + csv_quote(ch.name) + "," + (ch.pass ? "true" : "false") + "," + gap.str()
                 + "," + tol.str() + "\n";
        if (!ch.pass) {
            failed.push_back(ch.suite + ": " + ch.name);
            err << "verification failed: " << ch.suite << ": " << ch.name;
            if (!ch.detail.empty()) {
                err << " (" << ch.detail << ")";
            }
            err << "\n";
            out.status = kExitVerifyFailed;
        }
    }
    out.result = {{"pass", failed.empty()}, {"checks", std::move(list)}, {"failed", std::move(failed)}};
    return out;
}

Outcome do_table(const JobConfig& c)
{
    const bool numeric = c.mode == "numeric";
    Outcome out;
    out.result = json::array();
    out.csv = numeric ? "n,k,closed_form,value,oracle,gap\n" : "n,k,closed_form,value\n";
    for (int n = 1; n <= c.n; ++n) {
        for (int k = 1; k <= c.k; ++k) {
            const SymbolicValue v = closed_S_k(n, k);
            const Real value = numeric_eval(v, c.digits);
            json row = {{"n", n}, {"k", k}, {"closed_form", render(v)}, {"value", value.str(c.digits)}};
            std::string line = std::to_string(n) + "," + std::to_string(k) + "," + csv_quote(render(v)) + ","
                             + value.str(c.digits);
            if (numeric) {
                OracleOptions o;
                o.truncation = c.truncation;
                o.digits = c.digits;
                const auto r = oracle_eval(LValueSpec::uniform(2, 2, n, k), o);
                WorkingPrecision scope(c.digits);
                const std::string gap = abs(r.value - Complex(value)).str(3);
                row["oracle"] = r.value.real().str(c.digits);
                row["gap"] = gap;
                line += "," + r.value.real().str(c.digits) + "," + gap;
            }
            out.result.push_back(std::move(row));
            out.text += "S_" + std::to_string(k) + "(" + std::to_string(n) + ") = " + render(v) + "\n";
            out.csv += line + "\n";
        }
    }
    return out;
}

} // namespace

void apply_environment(JobConfig& config)
{
    if (std::getenv("PMLV_PRECISION")) {
        config.digits = static_cast<int>(parse_env_long("PMLV_PRECISION"));
    }
    if (std::getenv("PMLV_T")) {
        config.truncation = parse_env_long("PMLV_T");
    }
}

int run(const JobConfig& config, std::ostream& out, std::ostream& err)
{
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        validate(config);
        if (config.command == "eval") {
            o = do_eval(config);
        } else if (config.command == "closed") {
            o = do_closed(config);
        } else if (config.command == "genfun") {
            o = do_genfun(config);
        } else if (config.command == "verify") {
            o = do_verify(config, err);
        } else {
            o = do_table(config);
        }
    } catch (const ConsistencyError& e) {
        err << "internal consistency failure: " << e.what() << "\n";
        return kExitVerifyFailed;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    if (config.output == "text") {
        out << o.text;
    } else if (config.output == "csv") {
        out << o.csv;
    } else {
        json doc = {{"command", config.command}, {"inputs", inputs_json(config)}, {"result", o.result}};
        if (!o.error_estimate.empty()) {
            doc["error_estimate"] = o.error_estimate;
        }
        if (config.timing) {
            const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);
            doc["runtime_ms"] = ms.count();
        }
        out << doc.dump(2) << "\n";
    }
    return o.status;
}

} // namespace pmlv
