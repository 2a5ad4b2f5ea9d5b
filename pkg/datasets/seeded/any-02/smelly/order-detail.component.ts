import { Component } from '@angular/core';
import { Order, Api } from './order.model';

@Component({
  selector: 'app-order-detail',
  template: `<p>{{ current?.name }}</p>`
})
export class OrderDetailComponent {
  current: Order | null = null;
  constructor(private api: Api) {}

  load(id: any): void {
    this.api.get(id).subscribe((data: any) => { this.current = data; });
  }

  parse(raw: string): any {
    return JSON.parse(raw);
  }

}
