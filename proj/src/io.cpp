#include "rufpp/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace rufpp {

namespace {

class LineReader {
public:
    explicit LineReader(std::istream& in) : in_(in) {}

    /// Next non-blank, non-comment line split into tokens; false at EOF.
    bool next(std::vector<std::string>& tokens) {
        std::string line;
        while (std::getline(in_, line)) {
            ++line_no_;
            if (auto hash = line.find('#'); hash != std::string::npos) {
                line.erase(hash);
            }
            std::istringstream ss(line);
            tokens.clear();
            for (std::string tok; ss >> tok;) {
                tokens.push_back(tok);
            }
            if (!tokens.empty()) {
                return true;
            }
        }
        return false;
    }

    std::vector<std::string> expect(const std::string& what) {
        std::vector<std::string> tokens;
        if (!next(tokens)) {
            throw ParseError(line_no_ + 1, "unexpected end of input, expected " + what);
        }
        return tokens;
    }

    int line() const { return line_no_; }

private:
    std::istream& in_;
    int line_no_ = 0;
};

long long parse_int(const std::string& tok, int line, const std::string& what) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
        throw ParseError(line, "expected integer " + what + ", got '" + tok + "'");
    }
    return value;
}

Rational parse_number(const std::string& tok, int line, const std::string& what) {
    try {
        return parse_rational(tok);
    } catch (const std::invalid_argument& e) {
        throw ParseError(line, what + ": " + e.what());
    }
}

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error("cannot open '" + path + "'");
    }
    return in;
}

} // namespace

Instance read_instance(std::istream& in) {
    LineReader reader(in);

    auto tokens = reader.expect("edge count m");
    if (tokens.size() != 1) {
        throw ParseError(reader.line(), "expected a single edge count");
    }
    const auto m = parse_int(tokens[0], reader.line(), "edge count");
    if (m < 1) {
        throw ParseError(reader.line(), "edge count must be positive");
    }

    tokens = reader.expect("capacities");
    if (static_cast<long long>(tokens.size()) != m) {
        throw ParseError(reader.line(), "expected " + std::to_string(m) + " capacities, got " +
                                            std::to_string(tokens.size()));
    }
    std::vector<Rational> caps;
    caps.reserve(tokens.size());
    for (const auto& tok : tokens) {
        caps.push_back(parse_number(tok, reader.line(), "capacity"));
        if (caps.back() <= 0) {
            throw ParseError(reader.line(), "capacity '" + tok + "' is not positive");
        }
    }
    PathInstance path(std::move(caps));

    tokens = reader.expect("flow count n");
    if (tokens.size() != 1) {
        throw ParseError(reader.line(), "expected a single flow count");
    }
    const auto n = parse_int(tokens[0], reader.line(), "flow count");
    if (n < 0) {
        throw ParseError(reader.line(), "flow count must be non-negative");
    }

    std::vector<Flow> flows;
    flows.reserve(static_cast<std::size_t>(n));
    for (long long i = 0; i < n; ++i) {
        tokens = reader.expect("flow 's t sigma'");
        if (tokens.size() != 3) {
            throw ParseError(reader.line(), "expected 's t sigma'");
        }
        Flow f;
        f.id = static_cast<FlowId>(i);
        f.s = static_cast<int>(parse_int(tokens[0], reader.line(), "source"));
        f.t = static_cast<int>(parse_int(tokens[1], reader.line(), "sink"));
        f.sigma = parse_number(tokens[2], reader.line(), "size");
        try {
            validate_flow(path, f);
        } catch (const InvalidFlowError& e) {
            throw ParseError(reader.line(), e.what());
        }
        flows.push_back(std::move(f));
    }
    if (std::vector<std::string> extra; reader.next(extra)) {
        throw ParseError(reader.line(), "trailing content after " + std::to_string(n) + " flows");
    }
    return Instance{std::move(path), std::move(flows)};
}

Instance read_instance_file(const std::string& path) {
    auto in = open_or_throw(path);
    return read_instance(in);
}

void write_instance(std::ostream& out, const Instance& instance) {
    out << instance.path.num_edges() << '\n';
    for (int j = 1; j <= instance.path.num_edges(); ++j) {
        out << (j > 1 ? " " : "") << format_rational(instance.path.capacity(j));
    }
    out << '\n' << instance.flows.size() << '\n';
    for (const auto& f : instance.flows) {
        out << f.s << ' ' << f.t << ' ' << format_rational(f.sigma) << '\n';
    }
}

Schedule read_schedule(std::istream& in) {
    LineReader reader(in);
    Schedule schedule;
    std::vector<std::string> tokens;
    bool saw_footer = false;
    long long declared = 0;
    while (reader.next(tokens)) {
        if (saw_footer) {
            throw ParseError(reader.line(), "content after 'rounds' line");
        }
        if (tokens[0] == "rounds") {
            if (tokens.size() != 2) {
                throw ParseError(reader.line(), "expected 'rounds <count>'");
            }
            declared = parse_int(tokens[1], reader.line(), "round count");
            saw_footer = true;
            continue;
        }
        if (tokens.size() != 2) {
            throw ParseError(reader.line(), "expected 'flow_index round_index'");
        }
        const auto flow = parse_int(tokens[0], reader.line(), "flow index");
        const auto round = parse_int(tokens[1], reader.line(), "round index");
        if (flow < 1 || round < 1) {
            throw ParseError(reader.line(), "indices are 1-based");
        }
        if (schedule.contains(static_cast<FlowId>(flow - 1))) {
            throw ParseError(reader.line(), "flow " + tokens[0] + " scheduled twice");
        }
        schedule.assign(static_cast<FlowId>(flow - 1), static_cast<int>(round));
    }
    if (!saw_footer) {
        throw ParseError(reader.line() + 1, "missing 'rounds <count>' line");
    }
    if (declared != schedule.num_rounds()) {
        throw ParseError(reader.line(), "declared " + std::to_string(declared) + " rounds but " +
                                            std::to_string(schedule.num_rounds()) + " are used");
    }
    return schedule;
}

Schedule read_schedule_file(const std::string& path) {
    auto in = open_or_throw(path);
    return read_schedule(in);
}

void write_schedule(std::ostream& out, const Schedule& schedule) {
    for (const auto& [flow, round] : schedule.assignments()) {
        out << flow + 1 << ' ' << round << '\n';
    }
    out << "rounds " << schedule.num_rounds() << '\n';
}

} // namespace rufpp
