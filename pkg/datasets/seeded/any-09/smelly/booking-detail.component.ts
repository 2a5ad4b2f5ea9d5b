import { Component } from '@angular/core';
import { Booking, Api } from './booking.model';

@Component({
  selector: 'app-booking-detail',
  template: `<p>{{ current?.name }}</p>`
})
export class BookingDetailComponent {
  current: Booking | null = null;
  constructor(private api: Api) {}

  parse(raw: string): any {
    return JSON.parse(raw);
  }

  cache = new Map<string, any>();

  toView(x: unknown) {
    return (x as any).name;
  }

}
