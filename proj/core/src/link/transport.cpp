#include "netpen/link/transport.hpp"

#include "netpen/error.hpp"

#include <arpa/inet.h>
#include <netinet/in.h>
#include <netinet/tcp.h>
#include <poll.h>
#include <sys/socket.h>
#include <unistd.h>

#include <chrono>
#include <condition_variable>
#include <cstring>
#include <deque>
#include <mutex>

namespace netpen::link {

namespace {

// One direction of the in-memory channel.
struct Pipe {
    std::mutex mu;
    std::condition_variable cv;
    std::deque<uint8_t> bytes;
    bool closed = false;

    void push(const uint8_t* data, size_t len) {
        {
            std::lock_guard lock(mu);
            if (closed) return;
            bytes.insert(bytes.end(), data, data + len);
        }
        cv.notify_all();
    }

    std::optional<size_t> pop(uint8_t* buf, size_t max, int timeout_ms) {
        std::unique_lock lock(mu);
        if (bytes.empty() && !closed) {
            if (timeout_ms <= 0) {
                return std::nullopt;
            }
            cv.wait_for(lock, std::chrono::milliseconds(timeout_ms),
                        [&] { return !bytes.empty() || closed; });
        }
        if (bytes.empty()) return closed ? std::optional<size_t>(0) : std::nullopt;
        size_t n = std::min(max, bytes.size());
        std::copy_n(bytes.begin(), n, buf);
        bytes.erase(bytes.begin(), bytes.begin() + static_cast<ptrdiff_t>(n));
        return n;
    }

    void close_side() {
        {
            std::lock_guard lock(mu);
            closed = true;
        }
        cv.notify_all();
    }
};

class MemoryTransport : public Transport {
public:
    MemoryTransport(std::shared_ptr<Pipe> out, std::shared_ptr<Pipe> in)
        : out_(std::move(out)), in_(std::move(in)) {}

    ~MemoryTransport() override { close(); }

    void send(const uint8_t* data, size_t len) override {
        if (!open_) throw Error(ErrorCode::LinkClosed, "send on a closed channel");
        out_->push(data, len);
    }

    std::optional<size_t> receive(uint8_t* buf, size_t max, int timeout_ms) override {
        return in_->pop(buf, max, timeout_ms);
    }

    void close() override {
        if (!open_) return;
        open_ = false;
        out_->close_side();
        in_->close_side();
    }

    bool is_open() const override { return open_; }

private:
    std::shared_ptr<Pipe> out_;
    std::shared_ptr<Pipe> in_;
    bool open_ = true;
};

class FdTransport : public Transport {
public:
    explicit FdTransport(int fd) : fd_(fd) {
        int one = 1;
        setsockopt(fd_, IPPROTO_TCP, TCP_NODELAY, &one, sizeof(one));
    }

    ~FdTransport() override { close(); }

    void send(const uint8_t* data, size_t len) override {
        size_t sent = 0;
        while (sent < len) {
            ssize_t n = ::send(fd_, data + sent, len - sent, MSG_NOSIGNAL);
            if (n < 0) {
                if (errno == EINTR) continue;
                close();
                throw Error(ErrorCode::LinkClosed,
                            std::string("socket send failed: ") + std::strerror(errno));
            }
            sent += static_cast<size_t>(n);
        }
    }

    std::optional<size_t> receive(uint8_t* buf, size_t max, int timeout_ms) override {
        if (fd_ < 0) return 0;
        struct pollfd pfd{fd_, POLLIN, 0};
        int pr = ::poll(&pfd, 1, timeout_ms);
        if (pr == 0) return std::nullopt;
        if (pr < 0) {
            if (errno == EINTR) return std::nullopt;
            return 0;
        }
        ssize_t n = ::recv(fd_, buf, max, 0);
        if (n < 0) {
            if (errno == EINTR || errno == EAGAIN) return std::nullopt;
            return 0;
        }
        return static_cast<size_t>(n);
    }

    void close() override {
        if (fd_ >= 0) {
            ::shutdown(fd_, SHUT_RDWR);
            ::close(fd_);
            fd_ = -1;
        }
    }

    bool is_open() const override { return fd_ >= 0; }

private:
    int fd_;
};

sockaddr_in make_addr(const std::string& host, uint16_t port) {
    sockaddr_in addr{};
    addr.sin_family = AF_INET;
    addr.sin_port = htons(port);
    if (inet_pton(AF_INET, host.c_str(), &addr.sin_addr) != 1)
        throw Error(ErrorCode::InvalidConfig, "not an IPv4 address: " + host);
    return addr;
}

} // namespace

std::pair<std::unique_ptr<Transport>, std::unique_ptr<Transport>> make_memory_pair() {
    auto ab = std::make_shared<Pipe>();
    auto ba = std::make_shared<Pipe>();
    return {std::make_unique<MemoryTransport>(ab, ba),
            std::make_unique<MemoryTransport>(ba, ab)};
}

std::unique_ptr<Transport> tcp_connect(const std::string& host, uint16_t port, int timeout_ms) {
    auto deadline = std::chrono::steady_clock::now() + std::chrono::milliseconds(timeout_ms);
    sockaddr_in addr = make_addr(host, port);
    for (;;) {
        int fd = ::socket(AF_INET, SOCK_STREAM, 0);
        if (fd < 0) throw Error(ErrorCode::LinkClosed, "cannot create socket");
        if (::connect(fd, reinterpret_cast<sockaddr*>(&addr), sizeof(addr)) == 0)
            return std::make_unique<FdTransport>(fd);
        ::close(fd);
        if (std::chrono::steady_clock::now() >= deadline)
            throw Error(ErrorCode::Timeout,
                        "connect to " + host + ":" + std::to_string(port) + " timed out");
        usleep(20 * 1000); // peer may still be binding
    }
}

TcpListener::TcpListener(const std::string& host, uint16_t port) {
    fd_ = ::socket(AF_INET, SOCK_STREAM, 0);
    if (fd_ < 0) throw Error(ErrorCode::LinkClosed, "cannot create listener socket");
    int one = 1;
    setsockopt(fd_, SOL_SOCKET, SO_REUSEADDR, &one, sizeof(one));
    sockaddr_in addr = make_addr(host, port);
    if (::bind(fd_, reinterpret_cast<sockaddr*>(&addr), sizeof(addr)) != 0) {
        ::close(fd_);
        fd_ = -1;
        throw Error(ErrorCode::LinkClosed,
                    "cannot bind " + host + ":" + std::to_string(port) + ": " +
                        std::strerror(errno));
    }
    if (::listen(fd_, 1) != 0) {
        ::close(fd_);
        fd_ = -1;
        throw Error(ErrorCode::LinkClosed, "listen failed");
    }
    socklen_t len = sizeof(addr);
    getsockname(fd_, reinterpret_cast<sockaddr*>(&addr), &len);
    port_ = ntohs(addr.sin_port);
}

TcpListener::~TcpListener() {
    if (fd_ >= 0) ::close(fd_);
}

std::unique_ptr<Transport> TcpListener::accept(int timeout_ms) {
    struct pollfd pfd{fd_, POLLIN, 0};
    int pr = ::poll(&pfd, 1, timeout_ms);
    if (pr <= 0) throw Error(ErrorCode::Timeout, "no peer connected before the timeout");
    int fd = ::accept(fd_, nullptr, nullptr);
    if (fd < 0) throw Error(ErrorCode::LinkClosed, "accept failed");
    return std::make_unique<FdTransport>(fd);
}

uint16_t pick_free_port(const std::string& host) {
    TcpListener probe(host, 0);
    return probe.port();
}

} // namespace netpen::link
