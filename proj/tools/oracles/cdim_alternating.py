# Independent brute-force centralizer dimension of A4, A5, A6 (strict chain length).
import itertools, functools
def alt(n):
    out=[]
    for p in itertools.permutations(range(n)):
        inv=sum(1 for i in range(n) for j in range(i+1,n) if p[i]>p[j])
        if inv%2==0: out.append(p)
    return out
def comp(a,b): return tuple(a[b[i]] for i in range(len(a)))
for n in (4,5,6):
    G=alt(n)
    C={g:frozenset(h for h in G if comp(g,h)==comp(h,g)) for g in G}
    cents={frozenset(G)}; frontier=set(cents)
    while frontier:
        new=set()
        for c in frontier:
            for g in G:
                d=c & C[g]
                if d not in cents: new.add(d)
        cents|=new; frontier=new
    cl=sorted(cents,key=len)
    @functools.lru_cache(None)
    def longest(c):
        return max([1+longest(d) for d in cl if len(d)<len(c) and d<c] or [0])
    print(n,len(G),len(cents),longest(frozenset(G)))
