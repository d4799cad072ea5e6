#include "apery/runner.hpp"

#include <atomic>
#include <fstream>
#include <iostream>
#include <regex>
#include <set>
#include <thread>

#include <json.hpp>

namespace apery {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::string fmt_real(const Real& r, unsigned digits) {
    return r.str(digits, std::ios_base::scientific);
}

std::string root_str(const RootOfUnity& x) {
    return std::to_string(x.numer) + "/" + std::to_string(x.order);
}

std::string complex_str(const Complex& z, unsigned digits) {
    std::string s = fmt_real(z.real(), digits);
    if (!z.imag().is_zero()) {
        std::string im = fmt_real(z.imag(), digits);
        if (!im.empty() && im[0] != '-')
            s += "+";
        s += im + "i";
    }
    return s;
}

std::string params_key(const IdentityParams& p, unsigned digits) {
    std::string k;
    if (p.q)
        k += "q=" + std::to_string(*p.q) + ";";
    if (p.p)
        k += "p=" + std::to_string(*p.p) + ";";
    if (p.m)
        k += "m=" + std::to_string(*p.m) + ";";
    if (p.a)
        k += "a=" + complex_str(*p.a, digits) + ";";
    if (p.b)
        k += "b=" + complex_str(*p.b, digits) + ";";
    if (p.x_root)
        k += "x=" + root_str(*p.x_root) + ";";
    if (p.x_val)
        k += "xv=" + complex_str(*p.x_val, digits) + ";";
    return k;
}

} // namespace

RootOfUnity parse_root(const std::string& text) {
    static const std::regex re(R"(^\s*(-?\d+)\s*/\s*(\d+)\s*$)");
    std::smatch m;
    if (!std::regex_match(text, m, re))
        throw ConfigError("root of unity must be given as \"p/N\" (angle 2*pi*p/N), got \"" +
                          text + "\"");
    long num = std::stol(m[1]);
    long den = std::stol(m[2]);
    if (den < 1)
        throw ConfigError("root of unity denominator must be >= 1 in \"" + text + "\"");
    return RootOfUnity(num, den);
}

Complex parse_complex(const std::string& text) {
    static const std::regex rational(R"(^\s*(-?\d+)\s*/\s*(-?\d+)\s*$)");
    static const std::regex realonly(R"(^\s*[+-]?(\d+\.?\d*|\.\d+)([eE][+-]?\d+)?\s*$)");
    static const std::regex complexre(
        R"(^\s*([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)\s*([+-]\s*(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)\s*[iI]\s*$)");
    static const std::regex imagonly(R"(^\s*([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)\s*[iI]\s*$)");
    std::smatch m;
    if (std::regex_match(text, m, rational)) {
        long den = std::stol(m[2]);
        if (den == 0)
            throw ConfigError("zero denominator in \"" + text + "\"");
        return Complex(Real(std::stol(m[1])) / Real(den));
    }
    if (std::regex_match(text, m, realonly))
        return Complex(Real(text));
    if (std::regex_match(text, m, complexre)) {
        std::string im = m[2];
        im.erase(std::remove_if(im.begin(), im.end(), ::isspace), im.end());
        return Complex(Real(m[1].str()), Real(im));
    }
    if (std::regex_match(text, m, imagonly))
        return Complex(Real(0), Real(m[1].str()));
    throw ConfigError("cannot parse number \"" + text +
                      "\" (expected decimal, p/q rational, or re+im i)");
}

void RunConfig::validate() const {
    if (digits < 20)
        throw ConfigError("digits must be >= 20");
    if (jobs < 1)
        throw ConfigError("jobs must be >= 1");
    if (tolerance_override && !(*tolerance_override > 0))
        throw ConfigError("tolerance must be positive");
}

std::vector<IdentityParams> resolve_grid(IdentityId id, const RunConfig& config) {
    std::vector<IdentityParams> grid = default_grid(id);
    std::vector<IdentityParams> out;
    std::set<std::string> seen;
    for (auto pt : grid) {
        if (config.q && pt.q)
            pt.q = *config.q;
        if (config.p && pt.p)
            pt.p = *config.p;
        if (config.m && pt.m)
            pt.m = *config.m;
        if (config.a && pt.a)
            pt.a = *config.a;
        if (config.b && pt.b)
            pt.b = *config.b;
        if (config.x_root && pt.x_root)
            pt.x_root = *config.x_root;
        if (config.fc_x && pt.x_val)
            pt.x_val = *config.fc_x;
        if (pt.q && pt.x_root && *pt.q == 1 && pt.x_root->is_one())
            throw ConfigError("the case (q, x) = (1, 1) is excluded: the series diverges "
                              "(identity " + std::string(identity_info(id).name) + ")");
        if (id == IdentityId::THM26) {
            if (pt.x_root && pt.x_root->is_one())
                throw ConfigError("THM26 requires theta in (0, 2*pi): x = 1/1 is excluded");
            if (pt.m && *pt.m > 8)
                throw ConfigError("THM26 derivative order m is capped at 8");
        }
        std::string key = params_key(pt, 40);
        if (seen.insert(key).second)
            out.push_back(std::move(pt));
    }
    return out;
}

std::vector<IdentityReport> run_suite(const RunConfig& config) {
    config.validate();
    auto ctx = PrecisionContext::with_digits(config.digits);
    ScopedPrecision scope(ctx.eval_digits());

    std::vector<IdentityId> ids = config.ids;
    if (ids.empty())
        for (const auto& info : identity_catalog())
            ids.push_back(info.id);

    struct Task {
        IdentityId id;
        IdentityParams params;
    };
    std::vector<Task> tasks;
    for (IdentityId id : ids)
        for (auto& pt : resolve_grid(id, config))
            tasks.push_back({id, std::move(pt)});

    std::vector<IdentityReport> reports(tasks.size());
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        ScopedPrecision thread_scope(ctx.eval_digits());
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= tasks.size())
                break;
            reports[i] = verify(tasks[i].id, tasks[i].params, ctx);
        }
    };
    unsigned n_threads = std::min<size_t>(config.jobs, tasks.size() ? tasks.size() : 1);
    if (n_threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < n_threads; ++t)
            pool.emplace_back(worker);
        for (auto& th : pool)
            th.join();
    }

    if (config.tolerance_override) {
        Real tol(*config.tolerance_override);
        for (auto& rep : reports) {
            rep.tolerance = tol;
            rep.pass = rep.error.empty() && rep.residual >= 0 && rep.residual <= tol;
        }
    }
    return reports;
}

void write_reports(std::ostream& os, const std::vector<IdentityReport>& reports,
                   const RunConfig& config) {
    unsigned d = config.digits;
    if (config.format == ReportFormat::Csv) {
        os << "id,q,p,m,a_re,a_im,b_re,b_im,x,x_val_re,x_val_im,"
              "lhs_re,lhs_im,rhs_re,rhs_im,residual,residual_mode,tolerance,"
              "terms_used,elapsed_ms,pass,error\n";
        for (const auto& r : reports) {
            const auto& p = r.params;
            os << identity_info(r.id).name << ",";
            os << (p.q ? std::to_string(*p.q) : "") << ",";
            os << (p.p ? std::to_string(*p.p) : "") << ",";
            os << (p.m ? std::to_string(*p.m) : "") << ",";
            os << (p.a ? fmt_real(p.a->real(), d) : "") << ","
               << (p.a ? fmt_real(p.a->imag(), d) : "") << ",";
            os << (p.b ? fmt_real(p.b->real(), d) : "") << ","
               << (p.b ? fmt_real(p.b->imag(), d) : "") << ",";
            os << (p.x_root ? root_str(*p.x_root) : "") << ",";
            os << (p.x_val ? fmt_real(p.x_val->real(), d) : "") << ","
               << (p.x_val ? fmt_real(p.x_val->imag(), d) : "") << ",";
            bool ok = r.error.empty();
            os << (ok ? fmt_real(r.lhs.real(), d) : "") << ","
               << (ok ? fmt_real(r.lhs.imag(), d) : "") << ","
               << (ok ? fmt_real(r.rhs.real(), d) : "") << ","
               << (ok ? fmt_real(r.rhs.imag(), d) : "") << ",";
            os << (ok ? fmt_real(r.residual, d) : "") << ",";
            os << (r.relative_mode ? "relative" : "absolute") << ",";
            os << fmt_real(r.tolerance, d) << ",";
            os << r.terms_used << "," << r.elapsed_ms << ",";
            os << (r.pass ? "true" : "false") << ",";
            std::string err = r.error;
            for (auto& c : err)
                if (c == ',' || c == '\n')
                    c = ';';
            os << err << "\n";
        }
        return;
    }

    ordered_json doc;
    doc["schema"] = "apery-verify/1";
    doc["digits"] = config.digits;
    ordered_json recs = ordered_json::array();
    bool all_pass = true;
    for (const auto& r : reports) {
        ordered_json rec;
        rec["id"] = identity_info(r.id).name;
        ordered_json pj = ordered_json::object();
        const auto& p = r.params;
        if (p.q)
            pj["q"] = *p.q;
        if (p.p)
            pj["p"] = *p.p;
        if (p.m)
            pj["m"] = *p.m;
        if (p.a)
            pj["a"] = complex_str(*p.a, d);
        if (p.b)
            pj["b"] = complex_str(*p.b, d);
        if (p.x_root)
            pj["x"] = root_str(*p.x_root);
        if (p.x_val)
            pj["x"] = complex_str(*p.x_val, d);
        rec["params"] = pj;
        if (r.error.empty()) {
            rec["lhs_re"] = fmt_real(r.lhs.real(), d);
            rec["lhs_im"] = fmt_real(r.lhs.imag(), d);
            rec["rhs_re"] = fmt_real(r.rhs.real(), d);
            rec["rhs_im"] = fmt_real(r.rhs.imag(), d);
            rec["residual"] = fmt_real(r.residual, d);
        } else {
            rec["residual"] = nullptr;
            rec["error"] = r.error;
        }
        rec["residual_mode"] = r.relative_mode ? "relative" : "absolute";
        rec["tolerance"] = fmt_real(r.tolerance, d);
        rec["terms_used"] = r.terms_used;
        rec["elapsed_ms"] = r.elapsed_ms;
        rec["pass"] = r.pass;
        all_pass = all_pass && r.pass;
        recs.push_back(std::move(rec));
    }
    doc["records"] = std::move(recs);
    doc["all_pass"] = all_pass;
    os << doc.dump(2) << "\n";
}

int run(const RunConfig& config) {
    config.validate();
    auto reports = run_suite(config);
    bool all_pass = true;
    for (const auto& r : reports)
        all_pass = all_pass && r.pass;
    if (config.out_path.empty()) {
        write_reports(std::cout, reports, config);
    } else {
        std::ofstream out(config.out_path);
        if (!out)
            throw ConfigError("cannot open output file \"" + config.out_path + "\"");
        write_reports(out, reports, config);
    }
    return all_pass ? 0 : 1;
}

} // namespace apery
