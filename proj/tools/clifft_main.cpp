#include <cstdio>

int main()
{
    std::puts("clifft: placeholder");
    return 2;
}
