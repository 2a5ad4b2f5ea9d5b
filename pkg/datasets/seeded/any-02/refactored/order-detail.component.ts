import { Component } from '@angular/core';
import { Order, Api } from './order.model';

@Component({
  selector: 'app-order-detail',
  template: `<p>{{ current?.name }}</p>`
})
export class OrderDetailComponent {
  current: Order | null = null;
  constructor(private api: Api) {}

  load(id: number): void {
    this.api.get(id).subscribe((data: Order) => { this.current = data; });
  }

  parse(raw: string): Order {
    return JSON.parse(raw) as Order;
  }

}
