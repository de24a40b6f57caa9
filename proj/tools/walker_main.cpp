#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "walker/store.hpp"
#include "walker/svg.hpp"

namespace fs = std::filesystem;
using namespace walker;

namespace {

store::Figure make_figure(const std::string& theta_text) {
    construction::Config config;
    config.theta = parse_rational(theta_text);
    if (config.theta <= 0) throw std::invalid_argument("theta must be positive");
    return store::build_figure(config);
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << content;
}

int run_build(const std::string& theta_text, const fs::path& out_dir) {
    const auto fig = make_figure(theta_text);
    const partition::Resolution theta{parse_rational(theta_text)};
    fs::create_directories(out_dir);
    write_file(out_dir / "trace.txt", construction::export_trace(fig.trace));
    write_file(out_dir / "graph.txt", fig.graph.export_text());
    write_file(out_dir / "partitions.txt", partition::export_table(fig.partitions, theta));
    write_file(out_dir / "construction.svg", svg::render_construction(fig.result));
    write_file(out_dir / "partitions.svg",
               svg::render_partitions(fig.arrangement, fig.partitions, theta));
    write_file(out_dir / "graph.svg", svg::render_graph(fig.arrangement));
    std::cout << "wrote 6 files to " << out_dir.string() << "\n";
    return 0;
}

int run_render(const std::string& figure, const std::string& theta_text,
               const fs::path& svg_path) {
    const auto fig = make_figure(theta_text);
    std::string content;
    if (figure == "construction") {
        content = svg::render_construction(fig.result);
    } else if (figure == "partitions") {
        content = svg::render_partitions(fig.arrangement, fig.partitions,
                                         partition::Resolution{parse_rational(theta_text)});
    } else if (figure == "graph") {
        content = svg::render_graph(fig.arrangement);
    } else {
        throw std::invalid_argument("unknown figure: " + figure);
    }
    write_file(svg_path, content);
    return 0;
}

int run_graph(const std::string& op, const std::vector<std::string>& args) {
    const auto fig = store::build_figure();
    const auto& g = fig.graph;
    auto join = [](const std::vector<std::string>& parts) {
        std::string out;
        for (const auto& p : parts) out += (out.empty() ? "" : " ") + p;
        return out;
    };
    if (op == "bfs" || op == "dfs") {
        if (args.size() != 1) throw std::invalid_argument(op + " needs a start vertex");
        const auto mode = op == "bfs" ? graph::TraversalMode::BreadthFirst
                                      : graph::TraversalMode::DepthFirst;
        std::cout << join(g.traverse(args[0], mode).visit_order) << "\n";
    } else if (op == "ham") {
        auto path = g.hamiltonian_path();
        if (!path) throw std::runtime_error("no hamiltonian path");
        std::cout << join(*path) << "\n";
    } else if (op == "dom") {
        auto dom = g.min_dominating_set();
        std::cout << "size=" << dom.size() << " {" << [&] {
            std::string out;
            for (const auto& v : dom) out += (out.empty() ? "" : ",") + v;
            return out;
        }() << "}\n";
    } else if (op == "path") {
        if (args.size() != 2) throw std::invalid_argument("path needs two vertices");
        std::cout << join(g.shortest_path(args[0], args[1])) << "\n";
    } else {
        throw std::invalid_argument("unknown graph operation: " + op);
    }
    return 0;
}

// Store state lives in a directory: manifest.txt plus records.log.
struct StoreState {
    store::Figure figure;
    std::optional<store::BlockStore> db;
    fs::path dir;

    explicit StoreState(fs::path d, const std::string& theta_text) : dir(std::move(d)) {
        figure = store::build_figure();
        if (fs::exists(dir / "manifest.txt")) {
            std::ifstream manifest(dir / "manifest.txt", std::ios::binary);
            std::stringstream buf;
            buf << manifest.rdbuf();
            db.emplace(store::import_manifest(figure, buf.str()));
            if (fs::exists(dir / "records.log")) {
                std::ifstream log(dir / "records.log", std::ios::binary);
                db->load_log(log);
            }
        } else {
            db.emplace(figure, partition::Resolution{parse_rational(theta_text)},
                       store::AccessPoint{});
        }
    }

    void persist() {
        fs::create_directories(dir);
        write_file(dir / "manifest.txt", db->export_manifest());
        std::ofstream log(dir / "records.log", std::ios::binary);
        db->save_log(log);
    }
};

int run_store(const std::string& op, const std::vector<std::string>& args,
              const fs::path& dir, const std::string& theta_text) {
    StoreState state(dir, theta_text);
    if (op == "put") {
        if (args.size() != 1) throw std::invalid_argument("put needs a payload");
        auto addr = state.db->ingest(args[0]);
        state.persist();
        std::cout << partition::address_to_string(addr) << "\n";
    } else if (op == "get") {
        if (args.size() != 1) throw std::invalid_argument("get needs an address");
        std::cout << state.db->read(partition::parse_address(args[0])).payload << "\n";
    } else if (op == "find") {
        if (args.size() != 1) throw std::invalid_argument("find needs a pattern");
        for (const auto& addr : state.db->search(args[0]))
            std::cout << partition::address_to_string(addr) << "\n";
    } else if (op == "cost") {
        if (args.size() != 1) throw std::invalid_argument("cost needs an address");
        std::cout << state.db->access_cost(partition::parse_address(args[0])) << "\n";
    } else if (op == "refine") {
        state.db->refine();
        state.persist();
        std::cout << "theta=" << rat_to_string(state.db->resolution().theta) << "\n";
    } else if (op == "manifest") {
        std::cout << state.db->export_manifest();
    } else {
        throw std::invalid_argument("unknown store operation: " + op);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"walker: figure construction, routing, partitioning and block storage"};
    app.require_subcommand(1);
    std::string theta = "1";
    app.add_option("--theta", theta, "block resolution, a positive rational like 1 or 1/2");

    auto* build = app.add_subcommand("build", "construct the figure and export everything");
    std::string out_dir = "out";
    build->add_option("--out", out_dir, "output directory");

    auto* render = app.add_subcommand("render", "render one figure to SVG");
    std::string figure = "construction", svg_path = "figure.svg";
    render->add_option("--figure", figure, "construction, partitions or graph");
    render->add_option("--svg", svg_path, "output path");

    auto* graph_cmd = app.add_subcommand("graph", "graph queries: bfs, dfs, ham, dom, path");
    std::vector<std::string> graph_args;
    graph_cmd->add_option("op", graph_args, "operation and its arguments")->expected(-1);

    auto* store_cmd =
        app.add_subcommand("store", "block store: put, get, find, cost, refine, manifest");
    std::string store_dir = "store";
    std::vector<std::string> store_args;
    store_cmd->add_option("--dir", store_dir, "state directory");
    store_cmd->add_option("op", store_args, "operation and its arguments")->expected(-1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (build->parsed()) return run_build(theta, out_dir);
        if (render->parsed()) return run_render(figure, theta, svg_path);
        if (graph_cmd->parsed()) {
            if (graph_args.empty()) throw std::invalid_argument("missing graph operation");
            return run_graph(graph_args[0], {graph_args.begin() + 1, graph_args.end()});
        }
        if (store_cmd->parsed()) {
            if (store_args.empty()) throw std::invalid_argument("missing store operation");
            return run_store(store_args[0], {store_args.begin() + 1, store_args.end()},
                             store_dir, theta);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
