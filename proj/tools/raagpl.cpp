// Command-line front end.
//
//   reduce     normal form of one word
//   decompose  left-greedy clique word decomposition
//   witness    certificate that the element acts nontrivially on the line
//   verify     independent re-check of a certificate file
//   separate   one certificate per element of a finite set
//   sweep      randomized invariant suite
//
// Exit statuses: 0 ok, 1 usage or parse error, 2 domain error, 3 verification
// failure. JSON is the machine format; --format text renders a report from the
// same data.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "raagpl/checker.hpp"
#include "raagpl/decompose.hpp"
#include "raagpl/errors.hpp"
#include "raagpl/json_io.hpp"
#include "raagpl/sweep.hpp"
#include "raagpl/textio.hpp"
#include "raagpl/witness.hpp"
#include "raagpl/word.hpp"

namespace {

using namespace raagpl;

struct InputFlags {
    std::string graph_file;
    std::string inline_text;
    std::vector<std::string> words;
};

struct OutputFlags {
    std::string out_path; // empty = stdout
    std::string format = "json";
};

void add_input_flags(CLI::App* cmd, InputFlags& in, bool many_words) {
    auto* file = cmd->add_option("--graph", in.graph_file, "problem file (vertices/graph/word directives)");
    auto* text = cmd->add_option("--inline", in.inline_text, "problem text passed directly");
    file->excludes(text);
    text->excludes(file);
    const char* help = many_words ? "word text (repeatable)" : "word text";
    cmd->add_option("--word", in.words, help);
}

void add_output_flags(CLI::App* cmd, OutputFlags& out) {
    cmd->add_option("--out", out.out_path, "write the artifact to this path instead of stdout");
    cmd->add_option("--format", out.format, "artifact format")
        ->check(CLI::IsMember({"json", "text"}));
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

ParsedInput load_input(const InputFlags& in) {
    if (in.graph_file.empty() && in.inline_text.empty())
        throw input_error("no input: pass --graph FILE or --inline TEXT");
    const std::string text = in.inline_text.empty() ? read_file(in.graph_file) : in.inline_text;
    ParsedInput parsed = parse_input(text);
    for (const std::string& w : in.words) parsed.words.push_back(parse_word_text(parsed.graph, w));
    return parsed;
}

const Word& single_word(const ParsedInput& parsed) {
    if (parsed.words.size() != 1)
        throw input_error("expected exactly one word, got " + std::to_string(parsed.words.size()));
    return parsed.words.front();
}

void emit(const OutputFlags& out, const json& machine, const std::string& human) {
    const std::string artifact = out.format == "json" ? machine.dump(2) + "\n" : human;
    if (out.out_path.empty()) {
        std::cout << artifact;
    } else {
        std::ofstream f(out.out_path, std::ios::binary);
        if (!f) throw input_error("cannot write " + out.out_path);
        f << artifact;
    }
}

std::string interval_text(const Rational& lo, const Rational& hi) {
    return "[" + to_string(lo) + ", " + to_string(hi) + "]";
}

int cmd_reduce(const InputFlags& in, const OutputFlags& out) {
    const ParsedInput p = load_input(in);
    const Word& w = single_word(p);
    const Word nf = reduce(p.graph, w);

    json j;
    j["graph"] = graph_to_json(p.graph);
    j["input"] = word_to_json(p.graph, w);
    j["reduced"] = word_to_json(p.graph, nf);
    j["length"] = nf.size();
    j["trivial"] = nf.empty();

    std::ostringstream os;
    os << graph_to_text(p.graph);
    os << "input: " << word_to_text(p.graph, w) << "\n";
    os << "reduced: " << word_to_text(p.graph, nf) << "\n";
    os << "length: " << nf.size() << "\n";
    os << "trivial: " << (nf.empty() ? "yes" : "no") << "\n";

    emit(out, j, os.str());
    return 0;
}

int cmd_decompose(const InputFlags& in, const OutputFlags& out) {
    const ParsedInput p = load_input(in);
    const Word& w = single_word(p);
    GreedyTrace trace;
    const CliqueDecomposition d = left_greedy_form(p.graph, w, &trace);

    json blocks = json::array();
    for (int i = 1; i <= d.k(); ++i) blocks.push_back(clique_word_to_json(p.graph, d.block(i)));
    json j;
    j["graph"] = graph_to_json(p.graph);
    j["element"] = word_to_json(p.graph, d.to_word());
    j["k"] = d.k();
    j["blocks"] = blocks; // application order: entry 0 is w_1
    j["complexity"] = d.complexity();
    j["slides"] = trace.slide_count;

    std::ostringstream os;
    os << graph_to_text(p.graph);
    os << "element: " << word_to_text(p.graph, d.to_word()) << "\n";
    os << "k: " << d.k() << "\n";
    for (int i = 1; i <= d.k(); ++i)
        os << "w_" << i << " = " << word_to_text(p.graph, d.block(i).to_word()) << "\n";
    os << "complexity:";
    for (int c : d.complexity()) os << " " << c;
    os << "\nslides: " << trace.slide_count << "\n";

    emit(out, j, os.str());
    return 0;
}

std::string witness_report(const Witness& wit, const Certificate& cert) {
    const Graph& g = wit.graph;
    std::ostringstream os;
    os << graph_to_text(g);
    os << "element: " << word_to_text(g, wit.element) << "\n";
    os << "k: " << wit.k << "\n";
    for (int i = 1; i <= wit.k; ++i) {
        const SpinePick& pick = wit.spine.picks[static_cast<size_t>(i) - 1];
        os << "w_" << i << " = " << word_to_text(g, wit.decomposition.block(i).to_word())
           << ", pick " << g.vertex_name(pick.vertex) << " sigma " << pick.sigma << " n " << pick.n
           << "\n";
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
        const PLMap& m = wit.images[static_cast<size_t>(v)];
        os << "psi(" << g.vertex_name(v) << "):";
        if (m.breakpoints().empty()) {
            os << " identity";
        } else {
            for (size_t i = 0; i < m.breakpoints().size(); ++i)
                os << " (" << to_string(m.breakpoints()[i]) << ", " << to_string(m.values()[i])
                   << ")";
        }
        os << "\n";
    }
    os << "test point: " << to_string(cert.test_point) << "\n";
    for (const StageStep& s : cert.stages)
        os << "stage " << s.stage << ": " << to_string(s.input) << " -> " << to_string(s.output)
           << "\n";
    os << "image: " << to_string(cert.image) << "\n";
    os << "target: " << interval_text(cert.target_lo, cert.target_hi) << "\n";
    os << "verified: " << (cert.verified ? "yes" : "no") << "\n";
    return os.str();
}

std::string witness_summary(const Witness& wit, const Certificate& cert) {
    return "image " + to_string(cert.image) + " in " +
           interval_text(cert.target_lo, cert.target_hi) + " (k = " + std::to_string(wit.k) + ")";
}

int cmd_witness(const InputFlags& in, const OutputFlags& out) {
    const ParsedInput p = load_input(in);
    const Word& w = single_word(p);
    if (is_trivial(p.graph, w))
        throw domain_error(
            "identity element: no witness exists (a separating witness requires g != 1)");
    const Witness wit = build_witness(p.graph, w);
    const Certificate cert = verify_witness(wit);
    emit(out, certificate_to_json(wit, cert), witness_report(wit, cert));
    std::cout << witness_summary(wit, cert) << "\n";
    return 0;
}

int cmd_verify(const std::string& cert_path) {
    const std::string text = read_file(cert_path);
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw input_error(std::string("certificate is not valid JSON: ") + e.what());
    }
    const CheckReport rep = check_certificate(doc);
    if (!rep.ok) throw verification_error(rep.failures.front());
    std::cout << "certificate valid: image " << doc["image"].get<std::string>() << " in ["
              << doc["target"][0].get<std::string>() << ", " << doc["target"][1].get<std::string>()
              << "]\n";
    return 0;
}

int cmd_separate(const InputFlags& in, const OutputFlags& out) {
    const ParsedInput p = load_input(in);
    if (p.words.empty()) throw input_error("separate needs at least one word");
    const std::vector<Witness> wits = separate_set(p.graph, p.words);

    json certs = json::array();
    std::ostringstream report;
    std::ostringstream lines;
    for (size_t i = 0; i < wits.size(); ++i) {
        const Certificate cert = verify_witness(wits[i]);
        certs.push_back(certificate_to_json(wits[i], cert));
        report << "element " << (i + 1) << ":\n" << witness_report(wits[i], cert);
        lines << "element " << (i + 1) << ": " << witness_summary(wits[i], cert) << "\n";
    }
    json j;
    j["certificates"] = certs;
    emit(out, j, report.str());
    std::cout << lines.str();
    return 0;
}

int cmd_sweep(const SweepConfig& cfg, const OutputFlags& out) {
    const SweepReport rep = run_random_sweep(cfg);
    if (!out.out_path.empty() || out.format == "text") {
        json fails = json::array();
        for (const CaseResult& c : rep.cases)
            if (!c.pass) fails.push_back({{"index", c.index}, {"detail", c.detail}});
        json j;
        j["seed"] = cfg.seed;
        j["cases"] = rep.cases.size();
        j["max_vertices"] = cfg.max_vertices;
        j["max_length"] = cfg.max_length;
        j["passed"] = rep.cases.size() - static_cast<size_t>(rep.failures);
        j["failed"] = rep.failures;
        j["failures"] = fails;
        emit(out, j, rep.summary() + "\n");
    }
    std::cout << rep.summary() << "\n";
    return rep.failures == 0 ? 0 : 3;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact piecewise-linear witnesses for right-angled Artin group elements"};
    app.require_subcommand(1);

    InputFlags in;
    OutputFlags out;
    std::string cert_path;
    SweepConfig sweep_cfg;

    CLI::App* reduce_cmd = app.add_subcommand("reduce", "normal form of one word");
    add_input_flags(reduce_cmd, in, false);
    add_output_flags(reduce_cmd, out);

    CLI::App* decompose_cmd =
        app.add_subcommand("decompose", "left-greedy clique word decomposition");
    add_input_flags(decompose_cmd, in, false);
    add_output_flags(decompose_cmd, out);

    CLI::App* witness_cmd =
        app.add_subcommand("witness", "certificate that the element acts nontrivially");
    add_input_flags(witness_cmd, in, false);
    add_output_flags(witness_cmd, out);

    CLI::App* verify_cmd = app.add_subcommand("verify", "independent re-check of a certificate");
    verify_cmd->add_option("certificate", cert_path, "certificate JSON file")->required();

    CLI::App* separate_cmd = app.add_subcommand("separate", "certificates for a set of elements");
    add_input_flags(separate_cmd, in, true);
    add_output_flags(separate_cmd, out);

    CLI::App* sweep_cmd = app.add_subcommand("sweep", "randomized invariant suite");
    sweep_cmd->add_option("--seed", sweep_cfg.seed, "random seed");
    sweep_cmd->add_option("--max-vertices", sweep_cfg.max_vertices, "largest graph size")
        ->check(CLI::Range(2, 26));
    sweep_cmd->add_option("--max-length", sweep_cfg.max_length, "longest sampled word")
        ->check(CLI::PositiveNumber);
    sweep_cmd->add_option("--cases", sweep_cfg.cases, "number of cases")
        ->check(CLI::PositiveNumber);
    add_output_flags(sweep_cmd, out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (reduce_cmd->parsed()) return cmd_reduce(in, out);
        if (decompose_cmd->parsed()) return cmd_decompose(in, out);
        if (witness_cmd->parsed()) return cmd_witness(in, out);
        if (verify_cmd->parsed()) return cmd_verify(cert_path);
        if (separate_cmd->parsed()) return cmd_separate(in, out);
        if (sweep_cmd->parsed()) return cmd_sweep(sweep_cfg, out);
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const verification_error& e) {
        std::cerr << "verification failed: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 1;
}
