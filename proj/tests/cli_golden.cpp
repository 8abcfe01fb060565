// Golden tests for the command-line tool: fixed invocations must produce
// byte-identical reports and the documented exit codes.
#include <array>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>

namespace {

int run(const std::string& cmd, std::string& out) {
    out.clear();
    FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
    if (!pipe)
        return -1;
    std::array<char, 4096> buf;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        out.append(buf.data(), n);
    int status = pclose(pipe);
    return WEXITSTATUS(status);
}

int failures = 0;

void expect(bool ok, const std::string& what) {
    if (!ok) {
        std::cerr << "FAIL: " << what << "\n";
        ++failures;
    }
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: cli_golden <path-to-qgkit>\n";
        return 2;
    }
    std::string bin = argv[1];
    std::string out, out2;

    int code = run(bin + " omega --n 2 --nu 1", out);
    expect(code == 0, "omega exit code");
    expect(out.find("\"21\": \"1\"") != std::string::npos, "omega kernel entry 21");
    expect(out.find("\"12\": \"-q\"") != std::string::npos, "omega kernel entry 12");
    expect(out.find("\"dimension\": 1") != std::string::npos, "omega dimension");

    run(bin + " omega --n 2 --nu 1", out2);
    expect(out == out2, "byte-identical reports for identical invocations");

    code = run(bin + " omega --n 2 --nu 7", out);
    expect(code == 0, "empty kernel still exits 0");
    expect(out.find("\"dimension\": 0") != std::string::npos, "empty kernel reported");

    code = run(bin + " scan-nu --n 2 --grid -1,0,1", out);
    expect(code == 0, "scan-nu exit code");
    expect(out.find("\"nu\": \"1\"") != std::string::npos, "scan grid echo");

    code = run(bin + " relations --n 2", out);
    expect(code == 0, "relations exit code");
    expect(out.find("E2*E1 - q*E1*E2") != std::string::npos, "order-2 relation text");

    code = run(bin + " check ybe", out);
    expect(code == 0, "check ybe all-pass");
    code = run(bin + " check hecke --nu -1/3", out);
    expect(code == 0, "check hecke at nu=-1/3");

    code = run(bin + " serre --cartan \"2,-1;-2,2\"", out);
    expect(code == 0, "serre exit code");

    code = run(bin + " oscillator constraints", out);
    expect(code == 0, "oscillator constraints exit code");
    expect(out.find("z*y - q^(2)*y*z") != std::string::npos, "first constraint text");

    code = run(bin + " nonsense", out);
    expect(code == 2, "unknown subcommand exits 2");
    code = run(bin + " omega", out);
    expect(code == 2, "missing required flag exits 2");

    code = run(bin + " --format text check hecke --nu 1", out);
    expect(code == 0, "text format");
    expect(out.find("pass") != std::string::npos, "text format content");

    if (failures) {
        std::cerr << failures << " golden check(s) failed\n";
        return 1;
    }
    std::cout << "cli golden checks passed\n";
    return 0;
}
